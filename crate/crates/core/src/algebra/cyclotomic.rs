//! Exact matrices over the cyclotomic integers Z[w_N].
//!
//! Entries are integer polynomials in `w` reduced modulo the N-th cyclotomic
//! polynomial, so two matrices are equal exactly when their reduced
//! coefficient arrays are equal.

use std::fmt;

use crate::error::{Error, Result};

/// The N-th cyclotomic polynomial, monic, coefficients from the constant term.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Arithmetic in Z[x]/Phi_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    order: u32,
    phi: Vec<i64>,
}

impl CyclotomicRing {
    pub fn new(order: u32) -> Self {
        CyclotomicRing { order, phi: cyclotomic_polynomial(order) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of coefficients in a reduced element (the degree of Phi_N).
    pub fn width(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut a: Vec<i64>) -> Vec<i64> {
        let d = self.width();
        for i in (d..a.len()).rev() {
            let c = a[i];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    a[i - d + j] -= c * pj;
                }
            }
        }
        a.truncate(d);
        a.resize(d, 0);
        a
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.width()]
    }

    /// w^k.
    pub fn root_power(&self, k: i64) -> Vec<i64> {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut a = vec![0i64; k.max(self.width()) + 1];
        a[k] = 1;
        self.reduce(a)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }
}

/// A square matrix with entries in Z[w_N].
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicMatrix {
    ring: CyclotomicRing,
    dim: usize,
    entries: Vec<Vec<i64>>,
}

impl fmt::Debug for CyclotomicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CyclotomicMatrix(N={}, dim={})", self.ring.order, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| format!("{:?}", self.entry(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl CyclotomicMatrix {
    pub fn zero(order: u32, dim: usize) -> Self {
        let ring = CyclotomicRing::new(order);
        let entries = vec![ring.zero(); dim * dim];
        CyclotomicMatrix { ring, dim, entries }
    }

    pub fn identity(order: u32, dim: usize) -> Self {
        Self::scalar_root(order, dim, 0)
    }

    /// w^k times the identity.
    pub fn scalar_root(order: u32, dim: usize, k: i64) -> Self {
        let mut m = Self::zero(order, dim);
        let w = m.ring.root_power(k);
        for i in 0..dim {
            m.entries[i * dim + i] = w.clone();
        }
        m
    }

    /// Monomial matrix: entry `(rows[j], j)` is `w^{powers[j]}`, everything else 0.
    pub fn monomial(order: u32, rows: &[usize], powers: &[i64]) -> Self {
        let dim = rows.len();
        let mut m = Self::zero(order, dim);
        for (col, (&row, &k)) in rows.iter().zip(powers).enumerate() {
            m.entries[row * dim + col] = m.ring.root_power(k);
        }
        m
    }

    /// Builds a matrix from rows of exponent options: `Some(k)` is `w^k`,
    /// `None` is zero.
    pub fn from_root_powers(order: u32, rows: &[Vec<Option<i64>>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zero(order, dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (c, e) in row.iter().enumerate() {
                if let Some(k) = e {
                    m.entries[r * dim + c] = m.ring.root_power(*k);
                }
            }
        }
        m
    }

    /// Entry-wise `sign * w^k`, used for matrices with entries in {0, ±1, ±i}.
    pub fn from_signed_powers(order: u32, rows: &[Vec<Option<(i64, i64)>>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zero(order, dim);
        for (r, row) in rows.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let Some((sign, k)) = e {
                    m.entries[r * dim + c] = m.ring.root_power(*k).into_iter().map(|x| x * sign).collect();
                }
            }
        }
        m
    }

    pub fn order(&self) -> u32 {
        self.ring.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> &[i64] {
        &self.entries[r * self.dim + c]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim || self.ring.order != other.ring.order {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} over Z[w_{}] by {}x{} over Z[w_{}]",
                self.dim, self.dim, self.ring.order, other.dim, other.dim, other.ring.order
            )));
        }
        let n = self.dim;
        let mut out = Self::zero(self.ring.order, n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if b.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let prod = self.ring.mul(a, b);
                    let cell = &mut out.entries[i * n + j];
                    *cell = self.ring.add(cell, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.ring.order, self.dim);
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.ring.order != other.ring.order {
            return Err(Error::Mismatch("tensor factors over different cyclotomic rings".into()));
        }
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let mut out = Self::zero(self.ring.order, n);
        for i1 in 0..a {
            for j1 in 0..a {
                let x = &self.entries[i1 * a + j1];
                for i2 in 0..b {
                    for j2 in 0..b {
                        let y = &other.entries[i2 * b + j2];
                        out.entries[(i1 * b + i2) * n + (j1 * b + j2)] = self.ring.mul(x, y);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Canonical comparison; the representation is always fully reduced.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if self.dim != other.dim || self.ring.order != other.ring.order {
            return Err(Error::Mismatch("comparing matrices of different shapes".into()));
        }
        Ok(self.entries == other.entries)
    }

    /// A hashable key for deduplicating matrices.
    pub fn key(&self) -> Vec<i64> {
        self.entries.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity_form_cyclic_group() {
        for n in [2u32, 3, 4, 5, 8, 9] {
            let w = CyclotomicMatrix::scalar_root(n, 2, 1);
            let mut acc = CyclotomicMatrix::identity(n, 2);
            for k in 1..=n {
                acc = acc.mul(&w).unwrap();
                let is_id = acc.equals(&CyclotomicMatrix::identity(n, 2)).unwrap();
                assert_eq!(is_id, k == n, "N={n}, k={k}");
            }
        }
    }

    #[test]
    fn qutrit_clock_cubes_to_identity() {
        let z = CyclotomicMatrix::from_root_powers(
            3,
            &[vec![Some(0), None, None], vec![None, Some(1), None], vec![None, None, Some(2)]],
        );
        assert!(!z.pow(2).equals(&CyclotomicMatrix::identity(3, 3)).unwrap());
        assert!(z.pow(3).equals(&CyclotomicMatrix::identity(3, 3)).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = CyclotomicMatrix::identity(4, 2);
        let b = CyclotomicMatrix::identity(4, 3);
        assert!(a.mul(&b).is_err());
        assert!(a.equals(&CyclotomicMatrix::identity(3, 2)).is_err());
    }
}
