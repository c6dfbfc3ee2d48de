//! The permutation module `M^(a,b)` and the maps `psi_{1,v}`.
//!
//! A tabloid of shape `(a, b)` is identified with the `b`-subset of `[a + b]`
//! filling its second row, so an element of `M^(a,b)` is a formal GF(p)
//! combination of `b`-subsets. `psi_{1,v}` sends a `b`-subset to the sum of
//! its `v`-subsets; its matrix is the inclusion matrix `A_v^b(n)`.
//!
//! By the kernel intersection theorem the Specht module `S^(a,b)` is the set
//! of elements killed by `psi_{1,v}` for every `0 <= v < b`. Levels `v > b`
//! are empty sums, so the range `0..b` is the whole condition.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Eliminator, MatFp, MatZ};
use crate::numtheory::{all_binoms_divisible, PrimeModulus};
use crate::subset::{binomial, k_subsets, BSubset, MAX_GROUND};

/// A two-part partition `(a, b)` with `a >= b >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition2 {
    a: usize,
    b: usize,
}

impl Partition2 {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if b == 0 || a < b {
            return Err(Error::InvalidPartition { a, b });
        }
        if a + b > MAX_GROUND {
            return Err(Error::GroundTooLarge(a + b));
        }
        Ok(Partition2 { a, b })
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    pub fn n(self) -> usize {
        self.a + self.b
    }

    /// Number of tabloids, `C(n, b)`.
    pub fn tabloid_count(self) -> usize {
        binomial(self.n(), self.b) as usize
    }
}

/// A partition with any number of parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralPartition {
    parts: Vec<usize>,
}

impl GeneralPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidGeneralPartition(parts));
        }
        Ok(GeneralPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn two_part(&self) -> Option<Partition2> {
        match self.parts[..] {
            [a, b] => Partition2::new(a, b).ok(),
            _ => None,
        }
    }
}

impl From<Partition2> for GeneralPartition {
    fn from(l: Partition2) -> Self {
        GeneralPartition {
            parts: vec![l.a, l.b],
        }
    }
}

/// A vector of `M^(a,b)`: GF(p) coefficients on the `b`-subsets of `[a + b]`.
///
/// `a` may be smaller than `b` here (the module is defined for compositions
/// too), which lets the same type carry arbitrary p-ary designs and the
/// images of `psi`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct Element {
    ground: usize,
    block: usize,
    p: PrimeModulus,
    coeffs: BTreeMap<BSubset, u32>,
}

impl Element {
    pub fn zero(ground: usize, block: usize, p: PrimeModulus) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::GroundTooLarge(ground));
        }
        if block > ground {
            return Err(Error::Size(format!(
                "block size {block} exceeds ground set {ground}"
            )));
        }
        Ok(Element {
            ground,
            block,
            p,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn for_partition(lambda: Partition2, p: PrimeModulus) -> Self {
        Element::zero(lambda.n(), lambda.b(), p).expect("partition sizes are valid")
    }

    /// Sums the given terms; repeated subsets accumulate.
    pub fn from_terms(
        ground: usize,
        block: usize,
        p: PrimeModulus,
        terms: impl IntoIterator<Item = (BSubset, u32)>,
    ) -> Result<Self> {
        let mut e = Element::zero(ground, block, p)?;
        for (s, c) in terms {
            e.check_subset(s)?;
            e.add_term(s, c);
        }
        Ok(e)
    }

    /// Coefficients indexed by colex rank.
    pub fn from_dense(ground: usize, block: usize, p: PrimeModulus, dense: &[u32]) -> Result<Self> {
        let expected = binomial(ground, block) as usize;
        if dense.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: dense.len(),
            });
        }
        Element::from_terms(
            ground,
            block,
            p,
            k_subsets(ground, block).zip(dense.iter().copied()),
        )
    }

    fn check_subset(&self, s: BSubset) -> Result<()> {
        if s.len() != self.block || s.mask() >> self.ground != 0 {
            return Err(Error::Size(format!(
                "{s} is not a {}-subset of [{}]",
                self.block, self.ground
            )));
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, s: BSubset, c: u32) {
        let p = self.p;
        let c = p.reduce(c as u64);
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(s).or_insert(0);
        *entry = p.add(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&s);
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Length of the first row, `ground - block`.
    pub fn a(&self) -> usize {
        self.ground - self.block
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn partition(&self) -> Result<Partition2> {
        Partition2::new(self.a(), self.block)
    }

    pub fn coeff(&self, s: BSubset) -> u32 {
        self.coeffs.get(&s).copied().unwrap_or(0)
    }

    /// Nonzero terms in colex order.
    pub fn terms(&self) -> impl Iterator<Item = (BSubset, u32)> + '_ {
        self.coeffs.iter().map(|(&s, &c)| (s, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_dense(&self) -> Vec<u32> {
        let mut v = vec![0; binomial(self.ground, self.block) as usize];
        for (s, c) in self.terms() {
            v[s.colex_rank()] = c;
        }
        v
    }

    fn check_compatible(&self, other: &Element) -> Result<()> {
        if self.ground != other.ground || self.block != other.block || self.p != other.p {
            return Err(Error::Size(format!(
                "elements live in different modules: ({}, {}, p={}) vs ({}, {}, p={})",
                self.a(),
                self.block,
                self.p,
                other.a(),
                other.block,
                other.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.axpy(1, other)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.axpy(self.p.neg(1), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: u32, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.axpy_assign(c, other)?;
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn axpy_assign(&mut self, c: u32, other: &Element) -> Result<()> {
        self.check_compatible(other)?;
        for (s, x) in other.terms() {
            self.add_term(s, self.p.mul(c, x));
        }
        Ok(())
    }

    pub fn scale(&self, c: u32) -> Element {
        let p = self.p;
        let c = p.reduce(c as u64);
        let coeffs = if c == 0 {
            BTreeMap::new()
        } else {
            self.coeffs
                .iter()
                .map(|(&s, &x)| (s, p.mul(c, x)))
                .collect()
        };
        Element {
            coeffs,
            ..self.clone()
        }
    }

    /// Coefficient if every `block`-subset carries the same one.
    pub fn constant_value(&self) -> Option<u32> {
        if self.coeffs.is_empty() {
            return Some(0);
        }
        if self.coeffs.len() as u64 != binomial(self.ground, self.block) {
            return None;
        }
        let first = *self.coeffs.values().next().expect("nonempty");
        self.coeffs.values().all(|&c| c == first).then_some(first)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    set: Vec<usize>,
    coeff: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    p: u64,
    a: usize,
    b: usize,
    entries: Vec<EntryJson>,
}

impl TryFrom<ElementJson> for Element {
    type Error = Error;

    fn try_from(j: ElementJson) -> Result<Self> {
        let p = PrimeModulus::new(j.p)?;
        let ground = j.a + j.b;
        let mut e = Element::zero(ground, j.b, p).map_err(|err| Error::Schema(err.to_string()))?;
        let mut seen = std::collections::BTreeSet::new();
        for entry in j.entries {
            let s = BSubset::from_members(&entry.set, ground)?;
            if s.len() != j.b {
                return Err(Error::Schema(format!(
                    "set {:?} does not have size {}",
                    entry.set, j.b
                )));
            }
            if entry.coeff >= p.get() as u64 {
                return Err(Error::Schema(format!(
                    "coefficient {} not in [0, {p})",
                    entry.coeff
                )));
            }
            if !seen.insert(s) {
                return Err(Error::Schema(format!("set {:?} listed twice", entry.set)));
            }
            e.add_term(s, entry.coeff as u32);
        }
        Ok(e)
    }
}

impl From<Element> for ElementJson {
    fn from(e: Element) -> Self {
        ElementJson {
            p: e.p.get() as u64,
            a: e.a(),
            b: e.block,
            entries: e
                .terms()
                .map(|(s, c)| EntryJson {
                    set: s.members(),
                    coeff: c as u64,
                })
                .collect(),
        }
    }
}

/// `f_lambda`, the sum of all tabloids.
pub fn f_lambda(lambda: Partition2, p: PrimeModulus) -> Element {
    constant_element(lambda.n(), lambda.b(), p, 1)
}

/// Every `block`-subset of `[ground]` with coefficient `c`.
pub fn constant_element(ground: usize, block: usize, p: PrimeModulus, c: u32) -> Element {
    let mut e = Element::zero(ground, block, p).expect("valid sizes");
    for s in k_subsets(ground, block) {
        e.add_term(s, c);
    }
    e
}

/// `psi_{1,v}(u)`: the coefficient of a `v`-subset `Y` is the sum of `u(X)`
/// over `X ⊇ Y`.
pub fn psi(u: &Element, v: usize) -> Result<Element> {
    if v > u.block {
        return Err(Error::LevelOutOfRange { v, b: u.block });
    }
    if v == u.block {
        return Ok(u.clone());
    }
    let mut out = Element::zero(u.ground, v, u.p)?;
    let size = binomial(u.ground, v);
    if size <= DENSE_LIMIT {
        let mut acc = vec![0u64; size as usize];
        for (x, c) in u.terms() {
            for y in x.subsets_of_size(v) {
                acc[y.colex_rank()] += c as u64;
            }
        }
        for (rank, c) in acc.into_iter().enumerate() {
            if c != 0 {
                out.add_term(BSubset::colex_unrank(rank, v), u.p.reduce(c));
            }
        }
    } else {
        let mut acc: HashMap<BSubset, u64> = HashMap::new();
        for (x, c) in u.terms() {
            for y in x.subsets_of_size(v) {
                *acc.entry(y).or_insert(0) += c as u64;
            }
        }
        for (y, c) in acc {
            out.add_term(y, u.p.reduce(c));
        }
    }
    Ok(out)
}

// psi accumulates into a dense vector up to this many target subsets
const DENSE_LIMIT: u64 = 1 << 24;

/// Positions (row, column) of the ones of `A_i^b(n)`, grouped by row.
fn inclusion_rows(n: usize, i: usize, b: usize) -> Result<impl Iterator<Item = Vec<usize>>> {
    if i > b || b > n {
        return Err(Error::Size(format!(
            "inclusion matrix needs i <= b <= n, got ({i}, {b}, {n})"
        )));
    }
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    let full = BSubset::from_mask(if n == 0 { 0 } else { u64::MAX >> (64 - n) });
    Ok(k_subsets(n, i).map(move |y| {
        let mut cols: Vec<usize> = full
            .difference(y)
            .subsets_of_size(b - i)
            .map(|extra| y.union(extra).colex_rank())
            .collect();
        cols.sort_unstable();
        cols
    }))
}

/// Dense row of `A_v^b(n)` for the `v`-subset `y`, extended by `extra` zero
/// columns.
pub(crate) fn inclusion_row_fp(n: usize, y: BSubset, b: usize, extra: usize) -> Vec<u32> {
    let full = BSubset::from_mask(if n == 0 { 0 } else { u64::MAX >> (64 - n) });
    let mut row = vec![0u32; binomial(n, b) as usize + extra];
    for more in full.difference(y).subsets_of_size(b - y.len()) {
        row[y.union(more).colex_rank()] = 1;
    }
    row
}

/// `A_i^b(n)` over GF(p); rows and columns in colex order.
pub fn inclusion_matrix_fp(n: usize, i: usize, b: usize, p: PrimeModulus) -> Result<MatFp> {
    let cols = binomial(n, b) as usize;
    let mut m = MatFp::zeros(binomial(n, i) as usize, cols, p);
    for (r, ones) in inclusion_rows(n, i, b)?.enumerate() {
        for c in ones {
            m.set(r, c, 1);
        }
    }
    Ok(m)
}

/// `A_i^b(n)` over Z.
pub fn inclusion_matrix_z(n: usize, i: usize, b: usize) -> Result<MatZ> {
    let cols = binomial(n, b) as usize;
    let mut m = MatZ::zeros(binomial(n, i) as usize, cols);
    for (r, ones) in inclusion_rows(n, i, b)?.enumerate() {
        for c in ones {
            m.set(r, c, BigInt::from(1));
        }
    }
    Ok(m)
}

/// Whether `u` lies in the Specht module, i.e. `psi_{1,v}(u) = 0` for `v < b`.
pub fn specht_membership(u: &Element) -> bool {
    (0..u.block).all(|v| psi(u, v).expect("v < b").is_zero())
}

/// Row-reduces the stacked system `[A_v^b(n)]` for `v` in `levels` over
/// GF(p). With `constants`, one extra column per level holds `-1` on that
/// level's rows, so the kernel describes the elements whose `psi` images are
/// multiples of the all-ones vector (the scalar being the extra coordinate).
pub(crate) fn stacked_psi_eliminator(
    n: usize,
    b: usize,
    levels: &[usize],
    p: PrimeModulus,
    constants: bool,
) -> Eliminator {
    let cols = binomial(n, b) as usize;
    let extra = if constants { levels.len() } else { 0 };
    let mut elim = Eliminator::new(cols + extra, p);
    let mut order: Vec<(usize, usize)> = levels.iter().copied().enumerate().collect();
    // top levels first: they carry most of the rank
    order.sort_by_key(|x| std::cmp::Reverse(x.1));
    for (k, v) in order {
        for y in k_subsets(n, v) {
            let mut row = inclusion_row_fp(n, y, b, extra);
            if constants {
                row[cols + k] = p.neg(1);
            }
            elim.push_row(row).expect("row length matches");
        }
    }
    elim
}

/// Dimension of `S^lambda` over GF(p), computed as the nullity of the
/// stacked `psi` system.
pub fn specht_dim(lambda: Partition2, p: PrimeModulus) -> usize {
    let levels: Vec<usize> = (0..lambda.b()).collect();
    let elim = stacked_psi_eliminator(lambda.n(), lambda.b(), &levels, p, false);
    lambda.tabloid_count() - elim.rank()
}

/// Basis of `S^lambda` as elements of `M^lambda`.
pub fn specht_basis(lambda: Partition2, p: PrimeModulus) -> Vec<Element> {
    let levels: Vec<usize> = (0..lambda.b()).collect();
    let elim = stacked_psi_eliminator(lambda.n(), lambda.b(), &levels, p, false);
    elim.kernel_basis()
        .into_iter()
        .map(|v| Element::from_dense(lambda.n(), lambda.b(), p, &v).expect("kernel length"))
        .collect()
}

/// `C(lambda_i + j, j) = 0 mod p` for `1 <= j <= lambda_{i+1}` and every `i`.
pub fn james_check(lambda: &GeneralPartition, p: PrimeModulus) -> bool {
    lambda
        .parts()
        .windows(2)
        .all(|w| all_binoms_divisible(w[0] as u64, w[1] as u64, p))
}

/// `dim H^0(S_n, S^lambda)`. For two-part shapes the binomial criterion is
/// cross-checked against direct membership of `f_lambda`.
pub fn h0_dim(lambda: &GeneralPartition, p: PrimeModulus) -> Result<usize> {
    let james = james_check(lambda, p);
    if let Some(l2) = lambda.two_part() {
        if specht_membership(&f_lambda(l2, p)) != james {
            return Err(Error::Contract(format!(
                "f_lambda membership disagrees with the James criterion for {l2:?}"
            )));
        }
    }
    Ok(usize::from(james))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_fp, rank_q};

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    fn set(m: &[usize], n: usize) -> BSubset {
        BSubset::from_members(m, n).unwrap()
    }

    fn worked_u() -> Element {
        let avoid_one = k_subsets(6, 3).filter(|s| !s.contains(0)).map(|s| (s, 1));
        Element::from_terms(6, 3, p(3), avoid_one).unwrap()
    }

    #[test]
    fn partitions() {
        assert!(Partition2::new(2, 3).is_err());
        assert!(Partition2::new(2, 0).is_err());
        assert_eq!(Partition2::new(3, 3).unwrap().tabloid_count(), 20);
        assert!(GeneralPartition::new(vec![2, 3]).is_err());
        assert!(GeneralPartition::new(vec![]).is_err());
        assert!(GeneralPartition::new(vec![4, 2, 2, 1]).is_ok());
    }

    #[test]
    fn f_lambda_examples() {
        let f = f_lambda(Partition2::new(3, 3).unwrap(), p(3));
        assert_eq!(f.support_len(), 20);
        assert!(f.terms().all(|(_, c)| c == 1));
        assert_eq!(
            f_lambda(Partition2::new(2, 1).unwrap(), p(3)).support_len(),
            3
        );
        let f11 = f_lambda(Partition2::new(1, 1).unwrap(), p(5));
        let members: Vec<_> = f11.terms().map(|(s, c)| (s.members(), c)).collect();
        assert_eq!(members, vec![(vec![1], 1), (vec![2], 1)]);
    }

    #[test]
    fn psi_worked_example() {
        let u = worked_u();
        assert_eq!(u.support_len(), 10);
        assert!(psi(&u, 2).unwrap().is_zero());
        assert!(psi(&u, 1).unwrap().is_zero());
        // 10 * {} reduces to 1
        assert_eq!(psi(&u, 0).unwrap().coeff(BSubset::EMPTY), 1);
        assert_eq!(psi(&u, 3).unwrap(), u);
        assert!(matches!(
            psi(&u, 4),
            Err(Error::LevelOutOfRange { v: 4, b: 3 })
        ));

        let f = f_lambda(Partition2::new(3, 3).unwrap(), p(3));
        let f1 = psi(&f, 1).unwrap();
        assert_eq!(f1.constant_value(), Some(1));
    }

    #[test]
    fn inclusion_examples() {
        let a0 = inclusion_matrix_fp(5, 0, 2, p(3)).unwrap();
        assert_eq!((a0.rows(), a0.cols()), (1, 10));
        assert!(a0.row(0).iter().all(|&x| x == 1));
        let id = inclusion_matrix_fp(5, 2, 2, p(3)).unwrap();
        assert_eq!(id, MatFp::identity(10, p(3)));
        let a12 = inclusion_matrix_fp(4, 1, 2, p(3)).unwrap();
        for r in 0..4 {
            assert_eq!(a12.row(r).iter().filter(|&&x| x == 1).count(), 3);
        }
        assert_eq!(rank_fp(&a12), 4);
        assert!(inclusion_matrix_fp(4, 3, 2, p(3)).is_err());
    }

    #[test]
    fn psi_is_the_inclusion_matrix() {
        let q = p(5);
        for n in 1..=10 {
            for b in 1..=n.min(5) {
                for v in 0..b {
                    let m = inclusion_matrix_fp(n, v, b, q).unwrap();
                    for (col, x) in k_subsets(n, b).enumerate() {
                        let img = psi(&Element::from_terms(n, b, q, [(x, 1)]).unwrap(), v).unwrap();
                        let dense = img.to_dense();
                        for r in 0..m.rows() {
                            assert_eq!(m.get(r, col), dense[r]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(specht_membership(&f_lambda(
            Partition2::new(2, 1).unwrap(),
            p(3)
        )));
        assert!(!specht_membership(&f_lambda(
            Partition2::new(3, 3).unwrap(),
            p(3)
        )));
        assert!(specht_membership(&Element::zero(6, 3, p(3)).unwrap()));
    }

    /// Standard tableaux of shape (a, b): C(n, b) - C(n, b - 1).
    fn hook_count(a: usize, b: usize) -> usize {
        (binomial(a + b, b) - binomial(a + b, b - 1)) as usize
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(specht_dim(Partition2::new(3, 3).unwrap(), p(3)), 5);
        assert_eq!(specht_dim(Partition2::new(2, 1).unwrap(), p(3)), 2);
        assert_eq!(specht_dim(Partition2::new(1, 1).unwrap(), p(3)), 1);
        for q in [3, 5, 7] {
            for n in 2..=10 {
                for b in 1..=n / 2 {
                    let l = Partition2::new(n - b, b).unwrap();
                    assert_eq!(specht_dim(l, p(q)), hook_count(n - b, b), "{l:?} p={q}");
                }
            }
        }
    }

    #[test]
    fn specht_basis_lies_in_kernel() {
        let l = Partition2::new(4, 3).unwrap();
        let basis = specht_basis(l, p(3));
        assert_eq!(basis.len(), hook_count(4, 3));
        assert!(basis.iter().all(specht_membership));
    }

    #[test]
    fn james_examples() {
        let gp = |v: Vec<usize>| GeneralPartition::new(v).unwrap();
        assert!(james_check(&gp(vec![2, 1]), p(3)));
        assert!(james_check(&gp(vec![8, 3]), p(3)));
        assert!(!james_check(&gp(vec![3, 3]), p(3)));
        assert_eq!(h0_dim(&gp(vec![2, 1]), p(3)).unwrap(), 1);
        assert_eq!(h0_dim(&gp(vec![3, 3]), p(3)).unwrap(), 0);
        assert_eq!(h0_dim(&gp(vec![7]), p(5)).unwrap(), 1);
        assert_eq!(h0_dim(&gp(vec![8, 3, 3]), p(3)).unwrap(), 0);
        assert_eq!(h0_dim(&gp(vec![8, 2, 1]), p(3)).unwrap(), 1);
    }

    #[test]
    fn h0_matches_membership_up_to_twelve() {
        for q in [3, 5, 7] {
            for n in 2..=12 {
                for b in 1..=n / 2 {
                    let l = Partition2::new(n - b, b).unwrap();
                    let james = james_check(&l.into(), p(q));
                    assert_eq!(specht_membership(&f_lambda(l, p(q))), james, "{l:?} p={q}");
                }
            }
        }
    }

    #[test]
    fn psi_is_linear() {
        let q = p(5);
        let u = Element::from_terms(7, 3, q, k_subsets(7, 3).step_by(3).map(|s| (s, 2))).unwrap();
        let w = Element::from_terms(7, 3, q, k_subsets(7, 3).step_by(4).map(|s| (s, 3))).unwrap();
        for v in 0..3 {
            let lhs = psi(&u.scale(4).add(&w).unwrap(), v).unwrap();
            let rhs = psi(&u, v)
                .unwrap()
                .scale(4)
                .add(&psi(&w, v).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn composition_identity_small() {
        let n = 6;
        let (j, i, b) = (1, 2, 4);
        let lhs = inclusion_matrix_z(n, j, i)
            .unwrap()
            .mul(&inclusion_matrix_z(n, i, b).unwrap())
            .unwrap();
        let rhs = inclusion_matrix_z(n, j, b)
            .unwrap()
            .scale(&BigInt::from(binomial(b - j, i - j)));
        assert_eq!(lhs, rhs);
        assert_eq!(rank_q(&inclusion_matrix_z(n, 2, 3).unwrap()), 15);
    }

    #[test]
    fn json_round_trip_and_schema() {
        let u = worked_u();
        let s = serde_json::to_string(&u).unwrap();
        assert!(s.starts_with(r#"{"p":3,"a":3,"b":3,"entries":[{"set":[2,3,4],"coeff":1}"#));
        let back: Element = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);

        let bad = [
            r#"{"p":4,"a":1,"b":1,"entries":[]}"#,
            r#"{"p":3,"a":1,"b":1,"entries":[{"set":[1,2],"coeff":1}]}"#,
            r#"{"p":3,"a":1,"b":1,"entries":[{"set":[3],"coeff":1}]}"#,
            r#"{"p":3,"a":1,"b":1,"entries":[{"set":[1],"coeff":3}]}"#,
            r#"{"p":3,"a":1,"b":1,"entries":[{"set":[1],"coeff":1},{"set":[1],"coeff":1}]}"#,
            r#"{"p":3,"a":1,"b":1,"entries":[],"extra":0}"#,
        ];
        for b in bad {
            assert!(serde_json::from_str::<Element>(b).is_err(), "{b}");
        }
        let zero_coeff: Element =
            serde_json::from_str(r#"{"p":3,"a":1,"b":1,"entries":[{"set":[2],"coeff":0}]}"#)
                .unwrap();
        assert!(zero_coeff.is_zero());
        assert_eq!(set(&[2], 2).members(), vec![2]);
    }
}
