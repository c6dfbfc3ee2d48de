//! Integer matrices: exact rank over Q and integral solving.
//!
//! `solve_integer` brings `A` to column Hermite-style lower echelon form
//! `H = A U` with `U` unimodular, using only integral column operations
//! (Euclid on the current row, always pivoting on the smallest entry). The
//! system `H y = rhs` is then solved by forward substitution, where every
//! pivot division must be exact, and `x = U y`. Free coordinates of `y` are
//! set to zero, so the output is deterministic.
//!
//! The elimination first runs on checked `i128` and falls back to `BigInt`
//! if any intermediate overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatZ {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl MatZ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatZ {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(MatZ {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &MatZ) -> Result<MatZ> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = MatZ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, k: &BigInt) -> MatZ {
        MatZ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn vstack(&self, other: &MatZ) -> Result<MatZ> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatZ {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> MatZ {
        let mut out = MatZ::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank_q(a: &MatZ) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows).map(|i| a.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..a.cols {
        let Some(piv) = (rank..a.rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                // still needs the Bareiss rescale on the remaining columns
                for j in c + 1..a.cols {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * &pivot_row[c] / &prev;
                    }
                }
                continue;
            }
            let f = row[c].clone();
            for j in c + 1..a.cols {
                row[j] = (&row[j] * &pivot_row[c] - &f * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    rank
}

/// Integer arithmetic used by the column reduction.
trait Entry: Clone + std::fmt::Debug {
    fn zero_entry() -> Self;
    fn one_entry() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero_entry(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Quotient rounded towards negative infinity.
    fn div_floor(&self, other: &Self) -> Self;
    /// `self - q * b`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
}

impl Entry for i128 {
    fn zero_entry() -> Self {
        0
    }
    fn one_entry() -> Self {
        1
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero_entry(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
}

impl Entry for BigInt {
    fn zero_entry() -> Self {
        Zero::zero()
    }
    fn one_entry() -> Self {
        One::one()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero_entry(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
}

struct Overflow;

/// Result of the column reduction: `cols[k]` holds column `k` of `H` in the
/// first `rows` entries and column `k` of `U` in the rest.
struct ColumnForm<T> {
    rows: usize,
    cols: Vec<Vec<T>>,
    /// Pivot column created at each row, if any.
    row_pivot: Vec<Option<usize>>,
}

fn column_reduce<T: Entry>(a: &MatZ) -> std::result::Result<ColumnForm<T>, Overflow> {
    let (m, n) = (a.rows, a.cols);
    let mut cols: Vec<Vec<T>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut col = Vec::with_capacity(m + n);
        for i in 0..m {
            col.push(T::from_big(a.get(i, j)).ok_or(Overflow)?);
        }
        for k in 0..n {
            col.push(if k == j {
                T::one_entry()
            } else {
                T::zero_entry()
            });
        }
        cols.push(col);
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut row_pivot = vec![None; m];
    for i in 0..m {
        loop {
            let nz: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&j| !cols[j][i].is_zero_entry())
                .collect();
            match nz.len() {
                0 => break,
                1 => {
                    row_pivot[i] = Some(nz[0]);
                    active.retain(|&j| j != nz[0]);
                    break;
                }
                _ => {
                    let piv = *nz
                        .iter()
                        .min_by(|&&x, &&y| {
                            if cols[x][i].abs_lt(&cols[y][i]) {
                                std::cmp::Ordering::Less
                            } else if cols[y][i].abs_lt(&cols[x][i]) {
                                std::cmp::Ordering::Greater
                            } else {
                                x.cmp(&y)
                            }
                        })
                        .expect("nonempty");
                    let pcol = std::mem::take(&mut cols[piv]);
                    for &j in nz.iter().filter(|&&j| j != piv) {
                        let q = cols[j][i].div_floor(&pcol[i]);
                        let col = &mut cols[j];
                        // rows above i are already zero in active columns
                        for r in i..m + n {
                            if !pcol[r].is_zero_entry() {
                                col[r] = col[r].sub_mul(&q, &pcol[r]).ok_or(Overflow)?;
                            }
                        }
                    }
                    cols[piv] = pcol;
                }
            }
        }
    }
    Ok(ColumnForm {
        rows: m,
        cols,
        row_pivot,
    })
}

fn substitute<T: Entry>(form: &ColumnForm<T>, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = form.cols.len();
    let mut y: Vec<(usize, BigInt)> = Vec::new();
    for i in 0..form.rows {
        let mut residual = rhs[i].clone();
        for (k, yk) in &y {
            let h = &form.cols[*k][i];
            if !h.is_zero_entry() {
                residual -= h.to_big() * yk;
            }
        }
        match form.row_pivot[i] {
            Some(k) => {
                let (q, r) = residual.div_rem(&form.cols[k][i].to_big());
                if !Zero::is_zero(&r) {
                    return None;
                }
                y.push((k, q));
            }
            None if !Zero::is_zero(&residual) => return None,
            None => {}
        }
    }
    let mut x = vec![<BigInt as Zero>::zero(); n];
    for (k, yk) in &y {
        if Zero::is_zero(yk) {
            continue;
        }
        for (xi, u) in x.iter_mut().zip(&form.cols[*k][form.rows..]) {
            if !u.is_zero_entry() {
                *xi += u.to_big() * yk;
            }
        }
    }
    Some(x)
}

/// Some `x` in Z^cols with `A x = rhs`, or `None` if no integral solution exists.
pub fn solve_integer(a: &MatZ, rhs: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if rhs.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: rhs.len(),
        });
    }
    let x = match column_reduce::<i128>(a) {
        Ok(form) => substitute(&form, rhs),
        Err(Overflow) => match column_reduce::<BigInt>(a) {
            Ok(form) => substitute(&form, rhs),
            Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
        },
    };
    if let Some(x) = &x {
        if a.mul_vec(x)? != rhs {
            return Err(Error::Contract(
                "integral solution fails verification".into(),
            ));
        }
    }
    Ok(x)
}
