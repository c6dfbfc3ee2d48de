use crate::error::{Error, Result};
use crate::numtheory::PrimeModulus;

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFp {
    rows: usize,
    cols: usize,
    p: PrimeModulus,
    data: Vec<u32>,
}

impl MatFp {
    pub fn zeros(rows: usize, cols: usize, p: PrimeModulus) -> Self {
        MatFp {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: PrimeModulus) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of arbitrary integers, reducing each mod p.
    pub fn from_rows(rows: &[Vec<i64>], p: PrimeModulus) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, p);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = p.reduce_signed(x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.p.get();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let p = self.p;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x).fold(0u64, |acc, (&a, &b)| {
                    (acc + a as u64 * b as u64) % p.get() as u64
                }) as u32
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatFp) -> Result<MatFp> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatFp {
            rows: self.rows + other.rows,
            cols: self.cols,
            p: self.p,
            data,
        })
    }
}

/// `dst += f * src` entrywise, mod p.
#[inline]
fn axpy(dst: &mut [u32], src: &[u32], f: u32, p: PrimeModulus) {
    if f == 0 {
        return;
    }
    if p.is_small() {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = p.reduce_u32(*d + f * s);
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = p.reduce(*d as u64 + f as u64 * s as u64);
        }
    }
}

/// Incremental row reduction: rows are pushed one at a time and reduced
/// against the pivots found so far, so a stacked system never needs to be
/// materialized.
///
/// Pivot rows are normalized to a leading 1 but are not reduced against each
/// other until [`Eliminator::reduced_rows`] is called.
#[derive(Clone, Debug)]
pub struct Eliminator {
    cols: usize,
    p: PrimeModulus,
    pivots: Vec<Option<Box<[u32]>>>,
    rank: usize,
}

impl Eliminator {
    pub fn new(cols: usize, p: PrimeModulus) -> Self {
        Eliminator {
            cols,
            p,
            pivots: vec![None; cols],
            rank: 0,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of the leading `k` columns of everything pushed so far.
    pub fn rank_of_prefix(&self, k: usize) -> usize {
        self.pivots[..k].iter().filter(|r| r.is_some()).count()
    }

    /// Reduces `row` and keeps it if it is independent. Returns whether the
    /// rank grew.
    pub fn push_row(&mut self, mut row: Vec<u32>) -> Result<bool> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        if self.rank == self.cols {
            return Ok(false);
        }
        let p = self.p;
        for e in row.iter_mut() {
            *e %= p.get();
        }
        for c in 0..self.cols {
            let x = row[c];
            if x == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(piv) => axpy(&mut row[c..], &piv[c..], p.neg(x), p),
                None => {
                    let inv = p.inv(x)?;
                    for e in &mut row[c..] {
                        *e = p.mul(*e, inv);
                    }
                    self.pivots[c] = Some(row.into_boxed_slice());
                    self.rank += 1;
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| self.pivots[c].is_some())
            .collect()
    }

    /// Fully reduced echelon form: `(pivot column, row)` in increasing column order.
    pub fn reduced_rows(mut self) -> Vec<(usize, Vec<u32>)> {
        let p = self.p;
        let pivot_cols = self.pivot_cols();
        for (idx, &c) in pivot_cols.iter().enumerate().rev() {
            let src = self.pivots[c].take().expect("pivot present");
            for &c2 in &pivot_cols[..idx] {
                let dst = self.pivots[c2].as_mut().expect("pivot present");
                let x = dst[c];
                axpy(&mut dst[c..], &src[c..], p.neg(x), p);
            }
            self.pivots[c] = Some(src);
        }
        pivot_cols
            .into_iter()
            .map(|c| (c, self.pivots[c].take().expect("pivot present").into_vec()))
            .collect()
    }

    /// Basis of the right null space of the pushed rows: one vector per free
    /// column, with a 1 there and zeros on the other free columns.
    pub fn kernel_basis(self) -> Vec<Vec<u32>> {
        let cols = self.cols;
        let p = self.p;
        let reduced = self.reduced_rows();
        let mut is_pivot = vec![false; cols];
        for (c, _) in &reduced {
            is_pivot[*c] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u32; cols];
                v[f] = 1;
                for (c, row) in &reduced {
                    v[*c] = p.neg(row[f]);
                }
                v
            })
            .collect()
    }
}

fn eliminate(a: &MatFp) -> Eliminator {
    let mut e = Eliminator::new(a.cols, a.p);
    for i in 0..a.rows {
        e.push_row(a.row(i).to_vec()).expect("row length matches");
    }
    e
}

pub fn rank_fp(a: &MatFp) -> usize {
    eliminate(a).rank()
}

/// Right null space over GF(p), in reduced echelon form.
pub fn kernel_basis_fp(a: &MatFp) -> Vec<Vec<u32>> {
    eliminate(a).kernel_basis()
}

/// Solutions of `A x = rhs` over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Option<Vec<u32>>,
    pub kernel_basis: Vec<Vec<u32>>,
}

impl AffineSolution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

pub fn solve_affine_fp(a: &MatFp, rhs: &[u32]) -> Result<AffineSolution> {
    if rhs.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: rhs.len(),
        });
    }
    let p = a.p;
    let mut aug = Eliminator::new(a.cols + 1, p);
    for i in 0..a.rows {
        let mut row = Vec::with_capacity(a.cols + 1);
        row.extend_from_slice(a.row(i));
        row.push(rhs[i] % p.get());
        aug.push_row(row)?;
    }
    let inconsistent = aug.pivots[a.cols].is_some();
    let reduced = aug.reduced_rows();
    let particular = (!inconsistent).then(|| {
        let mut x = vec![0u32; a.cols];
        for (c, row) in &reduced {
            x[*c] = row[a.cols];
        }
        x
    });
    Ok(AffineSolution {
        particular,
        kernel_basis: kernel_basis_fp(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(rank_fp(&MatFp::identity(4, p(3))), 4);
        assert_eq!(rank_fp(&MatFp::zeros(3, 5, p(3))), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis_fp(&MatFp::identity(3, p(5))).is_empty());
        let k = kernel_basis_fp(&MatFp::zeros(1, 4, p(5)));
        assert_eq!(k.len(), 4);
        assert_eq!(
            rank_fp(
                &MatFp::from_rows(
                    &k.iter()
                        .map(|v| v.iter().map(|&x| x as i64).collect())
                        .collect::<Vec<_>>(),
                    p(5)
                )
                .unwrap()
            ),
            4
        );
    }

    #[test]
    fn affine_examples() {
        let id = MatFp::identity(3, p(3));
        let sol = solve_affine_fp(&id, &[2, 0, 1]).unwrap();
        assert_eq!(sol.particular, Some(vec![2, 0, 1]));
        assert!(sol.kernel_basis.is_empty());

        let zero = MatFp::zeros(2, 3, p(3));
        assert!(!solve_affine_fp(&zero, &[1, 0]).unwrap().is_consistent());

        let a = MatFp::from_rows(&[vec![1, 1]], p(3)).unwrap();
        let sol = solve_affine_fp(&a, &[2]).unwrap();
        assert_eq!(sol.particular, Some(vec![2, 0]));
        assert_eq!(sol.kernel_basis, vec![vec![2, 1]]);
        // (1, 2) spans the same line as (2, 1)
        assert_eq!(a.mul_vec(&[1, 2]).unwrap(), vec![0]);

        assert!(matches!(
            solve_affine_fp(&a, &[1, 1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn large_prime_path() {
        let q = p(1_000_003);
        let a = MatFp::from_rows(&[vec![2, 3], vec![4, 6]], q).unwrap();
        assert_eq!(rank_fp(&a), 1);
        let k = kernel_basis_fp(&a);
        assert_eq!(a.mul_vec(&k[0]).unwrap(), vec![0, 0]);
    }

    /// Every vector in GF(3)^cols, for exhaustive checks.
    fn all_vectors(cols: usize) -> Vec<Vec<u32>> {
        (0..3usize.pow(cols as u32))
            .map(|mut n| {
                (0..cols)
                    .map(|_| {
                        let d = (n % 3) as u32;
                        n /= 3;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 1usize..7, cols in 1usize..7, seed in proptest::collection::vec(0i64..5, 49)) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 7..i * 7 + cols].to_vec()).collect();
            let a = MatFp::from_rows(&m, p(5)).unwrap();
            let k = kernel_basis_fp(&a);
            prop_assert_eq!(rank_fp(&a) + k.len(), cols);
            for v in &k {
                prop_assert!(a.mul_vec(v).unwrap().iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn affine_matches_exhaustive_search(
            rows in 1usize..4,
            cols in 1usize..4,
            entries in proptest::collection::vec(0i64..3, 9),
            rhs in proptest::collection::vec(0u32..3, 3),
        ) {
            prop_assume!(rows * cols <= 9);
            let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
            let a = MatFp::from_rows(&m, p(3)).unwrap();
            let rhs = &rhs[..rows];
            let solutions: Vec<Vec<u32>> = all_vectors(cols)
                .into_iter()
                .filter(|x| a.mul_vec(x).unwrap() == rhs)
                .collect();
            let sol = solve_affine_fp(&a, rhs).unwrap();
            prop_assert_eq!(sol.is_consistent(), !solutions.is_empty());
            if let Some(x) = &sol.particular {
                prop_assert_eq!(&a.mul_vec(x).unwrap()[..], rhs);
                prop_assert_eq!(solutions.len(), 3usize.pow(sol.kernel_basis.len() as u32));
            }
        }
    }
}
