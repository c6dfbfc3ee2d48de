//! Integral and p-ary designs of constant block size.
//!
//! A design of block size `b` on `[g]` is a function `c` on the `b`-subsets;
//! its shadow `c^(Y) = sum_{X ⊇ Y} c(X)` on `v`-subsets is `psi_{1,v}` of the
//! corresponding element of `M^(g-b, b)`. The design is a `t`-design when the
//! shadow is constant on `t`-subsets and universal when it is a `t`-design for
//! every `t < b`. The per-level constants form the [`Spectrum`].

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve_affine_fp, solve_integer, MatZ};
use crate::numtheory::{binom_mod_p, checked_pow, digits_base_p, p_adic_length, PrimeModulus};
use crate::subset::{binomial, k_subsets, BSubset, MAX_GROUND};
use crate::tabloid::{
    inclusion_matrix_fp, inclusion_matrix_z, psi, stacked_psi_eliminator, Element, Partition2,
};

/// Ground set size `g`, block size `b` and strength `t`, with `t < b <= g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub g: usize,
    pub b: usize,
    pub t: usize,
    pub p: Option<PrimeModulus>,
}

impl DesignParams {
    pub fn new(g: usize, b: usize, t: usize, p: Option<PrimeModulus>) -> Result<Self> {
        if !(t < b && b <= g) {
            return Err(Error::Precondition(format!(
                "need t < b <= g, got g={g} b={b} t={t}"
            )));
        }
        if g > MAX_GROUND {
            return Err(Error::GroundTooLarge(g));
        }
        Ok(DesignParams { g, b, t, p })
    }

    fn modulus(&self) -> Result<PrimeModulus> {
        self.p
            .ok_or_else(|| Error::Precondition("a prime modulus is required".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Constant(u32),
    NotConstant,
}

/// Per-level shadow constants `mu_0, ..., mu_{b-1}` of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpectrumJson", into = "SpectrumJson")]
pub struct Spectrum {
    levels: Vec<Level>,
}

impl Spectrum {
    pub fn from_levels(levels: Vec<Level>) -> Self {
        Spectrum { levels }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, v: usize) -> Level {
        self.levels[v]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn is_universal(&self) -> bool {
        self.levels.iter().all(|l| matches!(l, Level::Constant(_)))
    }

    /// The constants, if every level is constant.
    pub fn values(&self) -> Option<Vec<u32>> {
        self.levels
            .iter()
            .map(|l| match l {
                Level::Constant(mu) => Some(*mu),
                Level::NotConstant => None,
            })
            .collect()
    }

    /// Per-level constant or `None`, as used in reports.
    pub fn as_options(&self) -> Vec<Option<u32>> {
        self.levels
            .iter()
            .map(|l| match l {
                Level::Constant(mu) => Some(*mu),
                Level::NotConstant => None,
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(|l| *l == Level::Constant(0))
    }
}

/// Some `alpha` with `target = alpha * source` levelwise, if one exists.
pub fn proportionality(target: &[u32], source: &[u32], p: PrimeModulus) -> Option<u32> {
    if target.len() != source.len() {
        return None;
    }
    let alpha = match source.iter().position(|&x| x != 0) {
        Some(k) => p.mul(target[k], p.inv(source[k]).expect("nonzero")),
        None => 0,
    };
    target
        .iter()
        .zip(source)
        .all(|(&t, &s)| t == p.mul(alpha, s))
        .then_some(alpha)
}

#[derive(Serialize, Deserialize)]
struct LevelJson {
    v: usize,
    constant: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    levels: Vec<LevelJson>,
}

impl From<Spectrum> for SpectrumJson {
    fn from(s: Spectrum) -> Self {
        SpectrumJson {
            levels: s
                .levels
                .iter()
                .enumerate()
                .map(|(v, l)| match l {
                    Level::Constant(mu) => LevelJson {
                        v,
                        constant: true,
                        mu: Some(*mu),
                    },
                    Level::NotConstant => LevelJson {
                        v,
                        constant: false,
                        mu: None,
                    },
                })
                .collect(),
        }
    }
}

impl TryFrom<SpectrumJson> for Spectrum {
    type Error = Error;

    fn try_from(j: SpectrumJson) -> Result<Self> {
        j.levels
            .into_iter()
            .enumerate()
            .map(|(i, l)| match (l.v == i, l.constant, l.mu) {
                (false, _, _) => Err(Error::Schema(format!("level {} out of order", l.v))),
                (true, true, Some(mu)) => Ok(Level::Constant(mu)),
                (true, false, None) => Ok(Level::NotConstant),
                _ => Err(Error::Schema(format!(
                    "level {i}: mu must be present iff constant"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Spectrum::from_levels)
    }
}

pub fn spectrum(u: &Element) -> Spectrum {
    Spectrum {
        levels: (0..u.block())
            .map(|v| match psi(u, v).expect("v < b").constant_value() {
                Some(mu) => Level::Constant(mu),
                None => Level::NotConstant,
            })
            .collect(),
    }
}

pub fn is_t_design(u: &Element, t: usize) -> Result<bool> {
    if t >= u.block() {
        return Err(Error::LevelOutOfRange { v: t, b: u.block() });
    }
    Ok(psi(u, t)?.constant_value().is_some())
}

pub fn is_universal(u: &Element) -> bool {
    spectrum(u).is_universal()
}

/// Whether `u`'s spectrum is a scalar multiple of `w`'s. A zero scalar is
/// only possible when `u`'s spectrum is zero.
pub fn similar(u: &Element, w: &Element) -> Result<bool> {
    if (u.ground(), u.block(), u.modulus()) != (w.ground(), w.block(), w.modulus()) {
        return Err(Error::Size("designs over different parameters".into()));
    }
    let su = spectrum(u).values().ok_or(Error::NotUniversal)?;
    let sw = spectrum(w).values().ok_or(Error::NotUniversal)?;
    Ok(proportionality(&su, &sw, u.modulus()).is_some())
}

/// The `j`-level constant forced on a `t`-design with constant `mu_t`:
/// `C(g-j, t-j) / C(b-j, t-j) * mu_t`.
pub fn coefficient_transfer(mu_t: u32, params: DesignParams, j: usize) -> Result<u32> {
    let p = params.modulus()?;
    let DesignParams { g, b, t, .. } = params;
    if j > t {
        return Err(Error::Precondition(format!("level {j} above strength {t}")));
    }
    let num = binom_mod_p((g - j) as u64, (t - j) as u64, p);
    let den = binom_mod_p((b - j) as u64, (t - j) as u64, p);
    let inv = p
        .inv(den)
        .map_err(|_| Error::NotInvertible(binomial(b - j, t - j), p.get()))?;
    Ok(p.mul(p.mul(num, inv), mu_t % p.get()))
}

/// Whether a non-null p-ary `t`-design of block size `b` on `[g]` exists:
/// for every `i <= t`, `C(b-i, t-i) = 0` must force `C(g-i, t-i) = 0`.
pub fn wilson_exists(params: DesignParams) -> Result<bool> {
    let p = params.modulus()?;
    let DesignParams { g, b, t, .. } = params;
    if b + t > g {
        return Err(Error::Precondition(format!(
            "need b <= g - t, got g={g} b={b} t={t}"
        )));
    }
    Ok((0..=t).all(|i| {
        binom_mod_p((b - i) as u64, (t - i) as u64, p) != 0
            || binom_mod_p((g - i) as u64, (t - i) as u64, p) == 0
    }))
}

/// A design whose `t`-shadow is `target` everywhere, found by solving
/// `A_t^b(g) c = target * 1` over GF(p).
pub fn find_t_design_fp(params: DesignParams, target: u32) -> Result<Option<Element>> {
    let p = params.modulus()?;
    let DesignParams { g, b, t, .. } = params;
    let a = inclusion_matrix_fp(g, t, b, p)?;
    let rhs = vec![target % p.get(); a.rows()];
    let sol = solve_affine_fp(&a, &rhs)?;
    sol.particular
        .map(|x| Element::from_dense(g, b, p, &x))
        .transpose()
}

/// Dimensions attached to a set of design levels; see [`condition_space`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSpace {
    /// Dimension of the designs that are `v`-designs for every listed level.
    pub dim: usize,
    /// Dimension of those that are null at every listed level.
    pub null_dim: usize,
    /// Basis of the first space, if requested.
    pub basis: Option<Vec<Element>>,
}

/// The space of `c` in `M^(g-b, b)` with `psi_{1,v}(c)` a multiple of the
/// all-ones vector for every `v` in `levels`, solved as one augmented system
/// with a scalar unknown per level.
pub fn condition_space(
    g: usize,
    b: usize,
    levels: &[usize],
    p: PrimeModulus,
    with_basis: bool,
) -> Result<ConditionSpace> {
    if g > MAX_GROUND {
        return Err(Error::GroundTooLarge(g));
    }
    if let Some(&v) = levels.iter().find(|&&v| v >= b || b > g) {
        return Err(Error::LevelOutOfRange { v, b });
    }
    let cols = binomial(g, b) as usize;
    let elim = stacked_psi_eliminator(g, b, levels, p, true);
    let rank = elim.rank();
    let null_dim = cols - elim.rank_of_prefix(cols);
    let dim = cols + levels.len() - rank;
    let basis = with_basis.then(|| {
        elim.kernel_basis()
            .into_iter()
            .map(|v| Element::from_dense(g, b, p, &v[..cols]).expect("length"))
            .collect()
    });
    Ok(ConditionSpace {
        dim,
        null_dim,
        basis,
    })
}

/// A Z-valued design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntDesign {
    ground: usize,
    block: usize,
    coeffs: BTreeMap<BSubset, BigInt>,
}

impl IntDesign {
    pub fn zero(ground: usize, block: usize) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::GroundTooLarge(ground));
        }
        if block > ground {
            return Err(Error::Size(format!(
                "block size {block} exceeds ground set {ground}"
            )));
        }
        Ok(IntDesign {
            ground,
            block,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn from_dense(ground: usize, block: usize, dense: &[BigInt]) -> Result<Self> {
        let mut d = IntDesign::zero(ground, block)?;
        for (s, c) in k_subsets(ground, block).zip(dense) {
            d.add_term(s, c.clone());
        }
        Ok(d)
    }

    fn add_term(&mut self, s: BSubset, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(s).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn coeff(&self, s: BSubset) -> BigInt {
        self.coeffs.get(&s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BSubset, &BigInt)> {
        self.coeffs.iter().map(|(&s, c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &IntDesign) -> Result<IntDesign> {
        if (self.ground, self.block) != (other.ground, other.block) {
            return Err(Error::Size("designs over different parameters".into()));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntDesign {
        let mut out = IntDesign {
            coeffs: BTreeMap::new(),
            ..self.clone()
        };
        for (s, c) in self.terms() {
            out.add_term(s, c * k);
        }
        out
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); binomial(self.ground, self.block) as usize];
        for (s, c) in self.terms() {
            v[s.colex_rank()] = c.clone();
        }
        v
    }

    /// The shadow constant on `v`-subsets, if the shadow is constant.
    pub fn level_constant(&self, v: usize) -> Option<BigInt> {
        if v > self.block {
            return None;
        }
        let mut acc: HashMap<BSubset, BigInt> = HashMap::new();
        for (x, c) in self.terms() {
            for y in x.subsets_of_size(v) {
                *acc.entry(y).or_insert_with(BigInt::zero) += c;
            }
        }
        let total = binomial(self.ground, v) as usize;
        let zero = BigInt::zero();
        let first = if acc.len() == total {
            acc.values().next().cloned().unwrap_or_default()
        } else {
            zero.clone()
        };
        acc.values().all(|c| *c == first).then_some(first)
    }

    /// Reduction mod p as an element of `M^(g-b, b)`.
    pub fn reduce(&self, p: PrimeModulus) -> Element {
        let m = BigInt::from(p.get());
        Element::from_terms(
            self.ground,
            self.block,
            p,
            self.terms().map(|(s, c)| {
                let r: BigInt = c.mod_floor(&m);
                (s, u32::try_from(r).expect("residue fits"))
            }),
        )
        .expect("same shape")
    }
}

/// Whether an integral design with shadow constants `mu_0..mu_t` exists:
/// `(g - s) mu_{s+1} = (b - s) mu_s` for `0 <= s < t`.
pub fn integral_design_exists(g: usize, b: usize, t: usize, mu: &[BigInt]) -> Result<bool> {
    DesignParams::new(g, b, t, None)?;
    if mu.len() <= t {
        return Err(Error::DimensionMismatch {
            expected: t + 1,
            found: mu.len(),
        });
    }
    Ok((0..t).all(|s| BigInt::from(g - s) * &mu[s + 1] == BigInt::from(b - s) * &mu[s]))
}

/// The stacked system `[A_t^b; ...; A_0^b] c = (mu_t 1; ...; mu_0 1)` over Z.
pub fn integral_system(g: usize, b: usize, t: usize, mu: &[BigInt]) -> Result<(MatZ, Vec<BigInt>)> {
    if mu.len() <= t {
        return Err(Error::DimensionMismatch {
            expected: t + 1,
            found: mu.len(),
        });
    }
    let mut a: Option<MatZ> = None;
    let mut rhs = Vec::new();
    for s in (0..=t).rev() {
        let block = inclusion_matrix_z(g, s, b)?;
        rhs.extend(std::iter::repeat_n(mu[s].clone(), block.rows()));
        a = Some(match a {
            None => block,
            Some(acc) => acc.vstack(&block)?,
        });
    }
    Ok((a.expect("t >= 0 gives one block"), rhs))
}

/// An integral design with the given constants, found by one integral solve
/// of the stacked system and checked by direct evaluation.
pub fn construct_integral_design(g: usize, b: usize, t: usize, mu: &[BigInt]) -> Result<IntDesign> {
    if !integral_design_exists(g, b, t, mu)? {
        return Err(Error::Precondition(format!(
            "no integral design with g={g} b={b} t={t} mu={mu:?}"
        )));
    }
    let (a, rhs) = integral_system(g, b, t, mu)?;
    let x = solve_integer(&a, &rhs)?
        .ok_or_else(|| Error::Contract(format!("integral system g={g} b={b} t={t} unsolvable")))?;
    let design = IntDesign::from_dense(g, b, &x)?;
    for (s, m) in mu.iter().enumerate().take(t + 1) {
        if design.level_constant(s).as_ref() != Some(m) {
            return Err(Error::Contract(format!("constructed design misses mu_{s}")));
        }
    }
    Ok(design)
}

/// The signed sum over the `2^(t+1)` ways of picking one point from each
/// pair, unioned with `rest`; the term picking every first point is
/// positive and each second point flips the sign. Every such sum is a null
/// design of strength `t`.
pub fn null_design_generator(
    g: usize,
    b: usize,
    t: usize,
    pairs: &[(usize, usize)],
    rest: &[usize],
) -> Result<IntDesign> {
    if pairs.len() != t + 1 || rest.len() + t + 1 != b {
        return Err(Error::Precondition(format!(
            "need {} pairs and {} further points for t={t}, b={b}",
            t + 1,
            b.saturating_sub(t + 1)
        )));
    }
    let mut used = 0u64;
    let mut claim = |x: usize| -> Result<u64> {
        if x == 0 || x > g || used >> (x - 1) & 1 == 1 {
            return Err(Error::Precondition(format!(
                "point {x} repeated or outside [1, {g}]"
            )));
        }
        used |= 1 << (x - 1);
        Ok(1 << (x - 1))
    };
    let mut base = 0u64;
    for &x in rest {
        base |= claim(x)?;
    }
    let mut bits = Vec::with_capacity(pairs.len());
    for &(x, y) in pairs {
        bits.push((claim(x)?, claim(y)?));
    }
    let mut d = IntDesign::zero(g, b)?;
    for choice in 0u64..1 << pairs.len() {
        let mut mask = base;
        let mut seconds = 0;
        for (i, &(x, y)) in bits.iter().enumerate() {
            if choice >> i & 1 == 1 {
                mask |= y;
                seconds += 1;
            } else {
                mask |= x;
            }
        }
        let sign = if seconds % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        d.add_term(BSubset::from_mask(mask), sign);
    }
    Ok(d)
}

/// The admissible levels of a universal design for `(a, b)` with the order
/// `i >=_X j` iff `i > j` and `C(b - j, i - j) != 0 mod p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetX {
    pub members: Vec<usize>,
    #[serde(skip)]
    pub relation: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

impl PosetX {
    pub fn component_of(&self, j: usize) -> Option<&[usize]> {
        self.components
            .iter()
            .find(|c| c.contains(&j))
            .map(Vec::as_slice)
    }
}

/// Level `j < b` is admissible when `(b - j)_m + a_m < p` for every digit
/// position `m < l_p(b)`.
pub fn poset_x(lambda: Partition2, p: PrimeModulus) -> PosetX {
    let (a, b) = (lambda.a() as u64, lambda.b() as u64);
    let len = p_adic_length(b, p).expect("b >= 1") as usize;
    let ad = digits_base_p(a, p);
    let members: Vec<usize> = (0..lambda.b())
        .filter(|&j| {
            let d = digits_base_p(b - j as u64, p);
            (0..len).all(|m| d.digit(m) + ad.digit(m) < p.get())
        })
        .collect();
    let mut relation = Vec::new();
    for (x, &j) in members.iter().enumerate() {
        for &i in &members[x + 1..] {
            if binom_mod_p(b - j as u64, (i - j) as u64, p) != 0 {
                relation.push((i, j));
            }
        }
    }
    // union-find over member indices
    let index: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut parent: Vec<usize> = (0..members.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &(i, j) in &relation {
        let (ri, rj) = (find(&mut parent, index[&i]), find(&mut parent, index[&j]));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &j) in members.iter().enumerate() {
        groups.entry(find(&mut parent, k)).or_default().push(j);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort();
    PosetX {
        members,
        relation,
        components,
    }
}

/// Whether a non-null `(b - p^l)`-design for `(a, b)` exists, in closed
/// form: the digit `a_l` is not `p - 1`, or `b < p^(l+1)`.
pub fn codegree_design_exists(lambda: Partition2, l: u32, p: PrimeModulus) -> bool {
    let a_l = digits_base_p(lambda.a() as u64, p).digit(l as usize);
    a_l != p.get() - 1 || checked_pow(p, l + 1).is_none_or(|q| (lambda.b() as u64) < q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_q;
    use crate::tabloid::f_lambda;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lam(a: usize, b: usize) -> Partition2 {
        Partition2::new(a, b).unwrap()
    }

    fn worked_u() -> Element {
        let terms = k_subsets(6, 3).filter(|s| !s.contains(0)).map(|s| (s, 1));
        Element::from_terms(6, 3, p(3), terms).unwrap()
    }

    #[test]
    fn spectra() {
        let c = Level::Constant;
        assert_eq!(spectrum(&worked_u()).levels(), &[c(1), c(0), c(0)]);
        assert_eq!(
            spectrum(&f_lambda(lam(3, 3), p(3))).levels(),
            &[c(2), c(1), c(1)]
        );
        assert!(spectrum(&Element::zero(6, 3, p(3)).unwrap()).is_zero());
    }

    #[test]
    fn t_designs() {
        for (a, b, q) in [(3, 3, 3), (4, 2, 5), (5, 1, 7)] {
            assert!(is_universal(&f_lambda(lam(a, b), p(q))));
        }
        assert!(is_universal(&worked_u()));
        let single = Element::from_terms(
            6,
            3,
            p(3),
            [(BSubset::from_members(&[1, 2, 3], 6).unwrap(), 1)],
        )
        .unwrap();
        assert!(is_t_design(&single, 0).unwrap());
        assert!(!is_t_design(&single, 1).unwrap());
        assert!(is_t_design(&single, 3).is_err());
    }

    #[test]
    fn similarity() {
        let u = worked_u();
        assert!(similar(&u, &u.scale(2)).unwrap());
        assert!(!similar(&u, &f_lambda(lam(3, 3), p(3))).unwrap());
        let zero = Element::zero(6, 3, p(3)).unwrap();
        assert!(similar(&zero, &f_lambda(lam(3, 3), p(3))).unwrap());
        assert!(!similar(&u, &zero).unwrap());
        let single = Element::from_terms(
            6,
            3,
            p(3),
            [(BSubset::from_members(&[1, 2, 3], 6).unwrap(), 1)],
        )
        .unwrap();
        assert!(matches!(similar(&single, &u), Err(Error::NotUniversal)));
    }

    #[test]
    fn transfer() {
        let params = DesignParams::new(6, 3, 2, Some(p(3))).unwrap();
        assert_eq!(coefficient_transfer(1, params, 1).unwrap(), 1);
        assert_eq!(coefficient_transfer(2, params, 2).unwrap(), 2);
        let params = DesignParams::new(9, 3, 1, Some(p(3))).unwrap();
        assert!(matches!(
            coefficient_transfer(1, params, 0),
            Err(Error::NotInvertible(3, 3))
        ));
        assert!(coefficient_transfer(1, params, 2).is_err());
    }

    #[test]
    fn transfer_matches_f_lambda() {
        for (a, b, q) in [(3, 3, 3), (5, 3, 5), (6, 4, 7), (4, 4, 5)] {
            let f = f_lambda(lam(a, b), p(q));
            let mu = spectrum(&f).values().unwrap();
            for t in 0..b {
                let params = DesignParams::new(a + b, b, t, Some(p(q))).unwrap();
                for j in 0..=t {
                    if let Ok(mu_j) = coefficient_transfer(mu[t], params, j) {
                        assert_eq!(mu_j, mu[j], "({a},{b}) p={q} t={t} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn wilson_examples() {
        let w = |g, b, t| wilson_exists(DesignParams::new(g, b, t, Some(p(3))).unwrap()).unwrap();
        assert!(w(9, 3, 1));
        assert!(!w(5, 3, 2));
        assert!(w(7, 3, 0));
        assert!(wilson_exists(DesignParams::new(5, 4, 2, Some(p(3))).unwrap()).is_err());
    }

    #[test]
    fn find_designs() {
        let params = DesignParams::new(4, 2, 1, Some(p(3))).unwrap();
        assert!(find_t_design_fp(params, 0).unwrap().unwrap().is_zero());
        let params = DesignParams::new(9, 3, 1, Some(p(3))).unwrap();
        let c = find_t_design_fp(params, 1).unwrap().unwrap();
        assert_eq!(psi(&c, 1).unwrap().constant_value(), Some(1));
        let params = DesignParams::new(5, 3, 2, Some(p(3))).unwrap();
        assert!(find_t_design_fp(params, 1).unwrap().is_none());
    }

    #[test]
    fn integral_existence() {
        assert!(integral_design_exists(4, 2, 1, &big(&[6, 3])).unwrap());
        assert!(!integral_design_exists(4, 2, 1, &big(&[1, 0])).unwrap());
        assert!(!integral_design_exists(4, 2, 1, &big(&[1, 1])).unwrap());
        assert!(integral_design_exists(7, 3, 0, &big(&[5])).unwrap());
        assert!(integral_design_exists(11, 3, 2, &big(&[55, 15, 3])).unwrap());
        assert!(integral_design_exists(4, 2, 1, &big(&[6])).is_err());
    }

    #[test]
    fn integral_construction() {
        let d = construct_integral_design(4, 2, 1, &big(&[6, 3])).unwrap();
        assert_eq!(d.level_constant(1), Some(BigInt::from(3)));
        let d = construct_integral_design(3, 3, 2, &big(&[7, 7, 7])).unwrap();
        assert_eq!(d.to_dense(), big(&[7]));
        let d = construct_integral_design(11, 3, 2, &big(&[55, 15, 3])).unwrap();
        assert_eq!(d.level_constant(0), Some(BigInt::from(55)));
        assert_eq!(d.level_constant(2), Some(BigInt::from(3)));
        assert!(matches!(
            construct_integral_design(4, 2, 1, &big(&[1, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn generators() {
        let d = null_design_generator(2, 1, 0, &[(1, 2)], &[]).unwrap();
        let terms: Vec<_> = d.terms().map(|(s, c)| (s.members(), c.clone())).collect();
        assert_eq!(
            terms,
            vec![(vec![1], BigInt::from(1)), (vec![2], BigInt::from(-1))]
        );
        assert_eq!(d.level_constant(0), Some(BigInt::zero()));

        let d = null_design_generator(4, 2, 1, &[(1, 2), (3, 4)], &[]).unwrap();
        let coeff = |m: &[usize]| d.coeff(BSubset::from_members(m, 4).unwrap());
        assert_eq!(coeff(&[1, 3]), BigInt::from(1));
        assert_eq!(coeff(&[1, 4]), BigInt::from(-1));
        assert_eq!(coeff(&[2, 3]), BigInt::from(-1));
        assert_eq!(coeff(&[2, 4]), BigInt::from(1));
        assert_eq!(d.level_constant(1), Some(BigInt::zero()));

        let d = null_design_generator(8, 4, 1, &[(2, 7), (5, 1)], &[3, 8]).unwrap();
        assert!(spectrum(&d.reduce(p(5))).levels()[..2]
            .iter()
            .all(|l| *l == Level::Constant(0)));

        assert!(null_design_generator(4, 2, 1, &[(1, 2), (2, 4)], &[]).is_err());
        assert!(null_design_generator(4, 2, 1, &[(1, 2)], &[3]).is_err());
        assert!(null_design_generator(4, 2, 1, &[(1, 2), (3, 5)], &[]).is_err());
    }

    #[test]
    fn posets() {
        let x = poset_x(lam(3, 3), p(3));
        assert_eq!(x.members, vec![0, 1, 2]);
        assert_eq!(x.relation, vec![(2, 1)]);
        assert_eq!(x.components, vec![vec![0], vec![1, 2]]);
        let x = poset_x(lam(8, 3), p(3));
        assert_eq!(x.members, vec![0]);
        assert_eq!(x.components, vec![vec![0]]);
        let x = poset_x(lam(3, 2), p(3));
        assert_eq!(x.members, vec![0, 1]);
        assert_eq!(x.components, vec![vec![0, 1]]);
        assert_eq!(
            serde_json::to_string(&poset_x(lam(3, 3), p(3))).unwrap(),
            r#"{"members":[0,1,2],"components":[[0],[1,2]]}"#
        );
    }

    #[test]
    fn codegree_closed_form() {
        // (5, 3), p = 3, l = 0: a_0 = 2 and b = p^(l+1) exactly
        assert!(!codegree_design_exists(lam(5, 3), 0, p(3)));
        let params = DesignParams::new(8, 3, 2, Some(p(3))).unwrap();
        assert!(find_t_design_fp(params, 1).unwrap().is_none());
        assert!(codegree_design_exists(lam(3, 3), 0, p(3)));
        assert!(codegree_design_exists(lam(5, 2), 0, p(3)));
    }

    #[test]
    fn spectrum_json() {
        let s = Spectrum::from_levels(vec![Level::Constant(1), Level::NotConstant]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"levels":[{"v":0,"constant":true,"mu":1},{"v":1,"constant":false}]}"#
        );
        assert_eq!(serde_json::from_str::<Spectrum>(&j).unwrap(), s);
        assert!(
            serde_json::from_str::<Spectrum>(r#"{"levels":[{"v":0,"constant":true}]}"#).is_err()
        );
    }

    #[test]
    fn condition_space_for_worked_example() {
        let cs = condition_space(6, 3, &[0, 1, 2], p(3), true).unwrap();
        assert_eq!(cs.dim, 7);
        assert_eq!(cs.null_dim, 5);
        let basis = cs.basis.unwrap();
        assert_eq!(basis.len(), 7);
        assert!(basis.iter().all(is_universal));
    }

    #[test]
    fn gottlieb_small() {
        assert_eq!(rank_q(&inclusion_matrix_z(7, 2, 4).unwrap()), 21);
    }

    #[test]
    fn spectrum_is_linear() {
        let q = p(5);
        let f = f_lambda(lam(4, 3), q);
        let generator = null_design_generator(7, 3, 1, &[(1, 4), (2, 6)], &[7])
            .unwrap()
            .reduce(q);
        let u = f.scale(3).add(&generator.scale(2)).unwrap();
        // the generator is null only through level 1
        let su = spectrum(&u).as_options();
        let sf = spectrum(&f).values().unwrap();
        for v in 0..2 {
            assert_eq!(su[v], Some(q.mul(3, sf[v])));
        }
    }
}
