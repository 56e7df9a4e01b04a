use num_bigint::BigUint;
use num_traits::Zero;

/// Counts of neutral and normal planar terms by size `n` and number of free
/// variables `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    /// `neutral[n][i]`, `i` in `0..=n+1`.
    neutral: Vec<Vec<BigUint>>,
    /// `normal[n][i]`, `i` in `0..=n+1`.
    normal: Vec<Vec<BigUint>>,
    max_vars: usize,
}

impl CountTable {
    pub fn max_size(&self) -> usize {
        self.neutral.len() - 1
    }

    pub fn max_vars(&self) -> usize {
        self.max_vars
    }

    /// Number of neutral planar terms of size `n` with `i` free variables.
    pub fn neutral(&self, n: usize, i: usize) -> BigUint {
        self.neutral
            .get(n)
            .and_then(|row| row.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Number of normal planar terms of size `n` with `i` free variables.
    pub fn normal(&self, n: usize, i: usize) -> BigUint {
        self.normal
            .get(n)
            .and_then(|row| row.get(i))
            .cloned()
            .unwrap_or_default()
    }
}

/// Fills both tables up to size `max_size` from
///
/// ```text
/// N[n][i] = [n = 0][i = 1] + Σ_{j+k=i} Σ_{a+b=n} N[a][j] · F[b][k]
/// F[n][i] = Σ_{j ≥ i} N[n-1][j]            (F[0][i] = 0)
/// ```
///
/// Every degree that can be non-zero is computed; `max_vars` only bounds
/// what callers display.
pub fn count_tables(max_size: usize, max_vars: usize) -> CountTable {
    let width = max_size + 2;
    let mut neutral = vec![vec![BigUint::zero(); width]; max_size + 1];
    let mut normal = vec![vec![BigUint::zero(); width]; max_size + 1];
    for n in 0..=max_size {
        if n > 0 {
            let mut suffix = BigUint::zero();
            for i in (0..width).rev() {
                suffix += &neutral[n - 1][i];
                normal[n][i] = suffix.clone();
            }
        }
        if n == 0 {
            neutral[0][1] = BigUint::from(1u32);
        }
        for i in 1..width {
            let mut acc = BigUint::zero();
            // F[0] vanishes, so the neutral side is strictly smaller
            for (a, left) in neutral.iter().enumerate().take(n) {
                let right = &normal[n - a];
                // pairs (j, k) with j + k = i and j >= 1
                for (x, y) in left[1..=i].iter().zip(right[..i].iter().rev()) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
            }
            neutral[n][i] += acc;
        }
    }
    CountTable {
        neutral,
        normal,
        max_vars,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn small_entries() {
        let t = count_tables(4, 4);
        assert_eq!(t.normal(3, 1), u(9));
        assert_eq!(t.neutral(2, 1), u(3));
        for i in 0..5 {
            assert_eq!(t.normal(0, i), u(0));
        }
        assert_eq!(t.neutral(0, 1), u(1));
        assert_eq!(t.neutral(3, 4), u(5));
        assert_eq!(t.neutral(3, 5), u(0));
        assert_eq!(t.normal(4, 5), u(0));
    }
}
