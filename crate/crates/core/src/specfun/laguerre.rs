/// Associated Laguerre polynomial `L_n^α(z)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + α - z) L_k - (k + α) L_{k-1}`.
pub fn assoc_laguerre(n: usize, alpha: f64, z: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - z;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - z) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    // Explicit sum L_n^α(z) = Σ_j (-1)^j C(n+α, n-j) z^j / j!, with the sum
    // of term magnitudes as a cancellation scale.
    fn explicit(n: usize, alpha: f64, z: f64) -> (f64, f64) {
        let binom = |top: f64, k: usize| -> f64 {
            (0..k).fold(1.0, |acc, i| acc * (top - i as f64) / (i as f64 + 1.0))
        };
        let mut sum = 0.0;
        let mut scale = 0.0;
        let mut fact = 1.0;
        for j in 0..=n {
            if j > 0 {
                fact *= j as f64;
            }
            let t = binom(n as f64 + alpha, n - j) * z.powi(j as i32) / fact;
            sum += (-1f64).powi(j as i32) * t;
            scale += t.abs();
        }
        (sum, scale)
    }

    #[test]
    fn reference_value() {
        assert!((assoc_laguerre(7, 11.7, 9.0) - 55.225_259_686_964_335).abs() < 1e-11);
    }

    #[test]
    fn low_orders() {
        assert_eq!(assoc_laguerre(0, 3.3, 7.0), 1.0);
        assert_eq!(assoc_laguerre(1, 0.4, 2.5), 1.0 + 0.4 - 2.5);
    }

    #[test]
    fn degree_three_at_one_and_a_half() {
        // L_3^2(z) = 10 - 10 z + 5/2 z² - 1/6 z³, so L_3^2(1.5) = 1/16.
        let v = assoc_laguerre(3, 2.0, 1.5);
        assert!((v - 0.0625).abs() < 1e-12);
        assert!((v - explicit(3, 2.0, 1.5).0).abs() < 1e-12);
    }

    #[test]
    fn matches_explicit_sum() {
        for n in 0..8 {
            for &alpha in &[0.0, 1.7, 11.7] {
                for &z in &[0.1, 3.0, 9.0] {
                    let r = assoc_laguerre(n, alpha, z);
                    let (e, scale) = explicit(n, alpha, z);
                    assert!((r - e).abs() <= 1e-14 * scale.max(1.0), "n={n} α={alpha} z={z}: {r} vs {e}");
                }
            }
        }
    }
}
