use num_complex::Complex64;

use crate::{Error, Result};

/// Value at zero of the polynomial through `(nodes[i], values[i])`, by
/// Neville's tableau.
pub fn neville_at_zero(nodes: &[f64], values: &[Complex64]) -> Result<Complex64> {
    if nodes.len() != values.len() || nodes.is_empty() {
        return Err(Error::config(format!(
            "extrapolation needs matching non-empty inputs, got {} nodes and {} values",
            nodes.len(),
            values.len()
        )));
    }
    let mut table = values.to_vec();
    let n = nodes.len();
    for m in 1..n {
        for i in 0..n - m {
            let (lo, hi) = (nodes[i], nodes[i + m]);
            if lo == hi {
                return Err(Error::config(format!("repeated extrapolation node {lo}")));
            }
            table[i] = table[i + 1] + (table[i + 1] - table[i]) * (hi / (lo - hi));
        }
    }
    Ok(table[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn single_point_is_identity() {
        assert_eq!(neville_at_zero(&[0.1], &[re(3.0)]).unwrap(), re(3.0));
    }

    #[test]
    fn reproduces_polynomials() {
        // 2 - 3e + 5e^2 + i e^3
        let f = |e: f64| Complex64::new(2.0 - 3.0 * e + 5.0 * e * e, e.powi(3));
        let nodes = [0.1, 0.05, 0.025, 0.0125];
        let values: Vec<_> = nodes.iter().map(|&e| f(e)).collect();
        let v = neville_at_zero(&nodes, &values).unwrap();
        assert!((v - re(2.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(neville_at_zero(&[], &[]).is_err());
        assert!(neville_at_zero(&[0.1, 0.1], &[re(1.0), re(2.0)]).is_err());
        assert!(neville_at_zero(&[0.1], &[re(1.0), re(2.0)]).is_err());
    }
}
