//! Integer matrices, Smith normal form and kernels of reduction mod n.
//!
//! The valuation matrix of a curve has one row per coordinate; its row
//! lattice is the image we care about, and its Smith form exposes the
//! finite quotient directly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub const DEFAULT_KERNEL_CAP: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from rows, which must all have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Invariant factors `d_1 | d_2 | … | d_k`, one per row, zeros last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryDivisors(pub Vec<BigInt>);

impl ElementaryDivisors {
    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().filter(|d| !d.is_zero()).count()
    }

    /// Order of the cokernel, `None` when it is infinite.
    pub fn index(&self) -> Option<BigInt> {
        if self.0.iter().any(Zero::is_zero) {
            return None;
        }
        Some(self.0.iter().product())
    }

    /// Largest divisor `d_k`, i.e. the exponent of the cokernel when finite.
    pub fn last(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// `∏ gcd(d_i, n)` with `gcd(0, n) = n`.
    pub fn kernel_size_mod(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::domain("modulus n must be at least 1"));
        }
        let n = BigInt::from(n);
        Ok(self.0.iter().map(|d| d.gcd(&n)).product())
    }

    pub fn satisfies_chain(&self) -> bool {
        self.0.windows(2).all(|w| {
            if w[1].is_zero() {
                true
            } else {
                !w[0].is_zero() && (&w[1] % &w[0]).is_zero()
            }
        }) && self.0.iter().all(|d| !d.is_negative())
    }
}

impl fmt::Display for ElementaryDivisors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm {
    pub divisors: ElementaryDivisors,
    /// Unimodular `k × k` row transform.
    pub u: IntMatrix,
    /// Unimodular `s × s` column transform; `u · m · v` is diagonal.
    pub v: IntMatrix,
}

/// Smith normal form with transforms, pivoting on the smallest nonzero entry.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (k, s) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(k);
    let mut v = IntMatrix::identity(s);

    for t in 0..k.min(s) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..s {
                    let x = &a[(i, j)];
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, k);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..k {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..s {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad_row = (t + 1..k).find(|&i| {
                (t + 1..s).any(|j| !(&a[(i, j)] % &pivot).is_zero())
            });
            match bad_row {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(a, u, v, k)
}

fn finish(a: IntMatrix, u: IntMatrix, v: IntMatrix, k: usize) -> SmithForm {
    let d = (0..k)
        .map(|i| {
            if i < a.cols {
                a[(i, i)].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    SmithForm {
        divisors: ElementaryDivisors(d),
        u,
        v,
    }
}

/// Rank over Q.
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).divisors.rank()
}

/// `#{a ∈ (Z/n)^k : a·M ≡ 0 mod n}`, read off the Smith form.
pub fn kernel_size_mod_n(m: &IntMatrix, n: u64) -> Result<BigInt> {
    smith_normal_form(m).divisors.kernel_size_mod(n)
}

/// Every `a ∈ (Z/n)^k` with `a·M ≡ 0 mod n`, sorted lexicographically.
///
/// With `U M V = D`, `a = b U` is in the kernel iff `b_i d_i ≡ 0` for each `i`,
/// so `b_i` ranges over multiples of `n / gcd(d_i, n)`.
pub fn enumerate_kernel_mod_n(m: &IntMatrix, n: u64, cap: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(Error::domain("modulus n must be at least 1"));
    }
    let snf = smith_normal_form(m);
    let size = snf.divisors.kernel_size_mod(n)?;
    if size > BigInt::from(cap) {
        return Err(Error::Resource {
            what: format!("kernel mod {n}"),
            needed: size.to_string(),
            cap,
        });
    }
    let nb = BigInt::from(n);
    let steps: Vec<BigInt> = snf
        .divisors
        .as_slice()
        .iter()
        .map(|d| &nb / d.gcd(&nb))
        .collect();
    let counts: Vec<u64> = snf
        .divisors
        .as_slice()
        .iter()
        .map(|d| d.gcd(&nb).to_u64().unwrap())
        .collect();
    let k = m.rows;
    let mut out = Vec::with_capacity(size.to_usize().unwrap_or(0));
    let mut idx = vec![0u64; k];
    loop {
        let mut a = vec![BigInt::zero(); k];
        for (i, &c) in idx.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let b = &steps[i] * c;
            for (j, aj) in a.iter_mut().enumerate() {
                *aj += &b * &snf.u[(i, j)];
            }
        }
        out.push(a.iter().map(|x| x.mod_floor(&nb).to_u64().unwrap()).collect());
        // odometer
        let mut i = 0;
        while i < k {
            idx[i] += 1;
            if idx[i] < counts[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out.sort();
    Ok(out)
}
