fn main() {
    std::process::exit(coulomb_kit::cli::run(std::env::args_os()));
}
