//! Hemmer elements: checking them and building them.
//!
//! `u` in `M^(a,b)` is Hemmer when every `psi_{1,v}(u)` is a constant
//! multiple of the fixed vector, at least one of those constants is nonzero,
//! and the constants are not a common multiple of those of `f_lambda`. Such
//! a `u` spans a non-split extension of `S^(a,b)` by the trivial module.
//! By the kernel intersection theorem both conditions only involve spectra.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::designs::{
    construct_integral_design, poset_x, proportionality, spectrum, wilson_exists, DesignParams,
};
use crate::error::{Error, Result};
use crate::h1::{classify, Kind};
use crate::numtheory::{binom_mod_p, binom_val_p, checked_pow, p_adic_val, PrimeModulus};
use crate::subset::{k_subsets, BSubset, MAX_GROUND};
use crate::tabloid::{constant_element, Element, Partition2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HemmerReport {
    /// One entry per level `v < b`; `None` where the shadow is not constant.
    pub spectrum: Vec<Option<u32>>,
    pub condition1: bool,
    pub some_level_nonzero: bool,
    pub condition2: bool,
    pub is_hemmer: bool,
}

pub fn verify_hemmer(u: &Element) -> HemmerReport {
    let p = u.modulus();
    let su = spectrum(u);
    let sf = constant_spectrum(u.ground(), u.block(), p);
    let condition1 = su.is_universal();
    let some_level_nonzero = su
        .as_options()
        .iter()
        .any(|m| matches!(m, Some(x) if *x != 0));
    // a non-constant level already rules out psi(c f - u) = 0
    let condition2 = match su.values() {
        Some(mu) => proportionality(&mu, &sf, p).is_none(),
        None => true,
    };
    HemmerReport {
        spectrum: su.as_options(),
        condition1,
        some_level_nonzero,
        condition2,
        is_hemmer: condition1 && some_level_nonzero && condition2,
    }
}

/// Spectrum of the all-ones element: a `v`-subset lies in `C(n - v, b - v)`
/// blocks.
pub fn constant_spectrum(n: usize, b: usize, p: PrimeModulus) -> Vec<u32> {
    (0..b)
        .map(|v| binom_mod_p((n - v) as u64, (b - v) as u64, p))
        .collect()
}

fn self_check(u: Element, what: &str) -> Result<Element> {
    if verify_hemmer(&u).is_hemmer {
        Ok(u)
    } else {
        Err(Error::Contract(format!(
            "{what} output failed the Hemmer check"
        )))
    }
}

/// Every `b`-subset of `[a + b]` avoiding `{1, ..., a - b + 1}`.
fn base_element(a: usize, b: usize, p: PrimeModulus) -> Result<Element> {
    let m = a - b + 1;
    let free = a + b - m;
    let shift = BSubset::from_mask((1u64 << m) - 1);
    Element::from_terms(
        a + b,
        b,
        p,
        k_subsets(free, b).map(|s| (s.relabel_avoiding(shift, a + b), 1)),
    )
}

/// The element for `b = p^beta` whose only nonzero shadow constant is at
/// level 0. Needs `a >= b` and `p^nu(a+1) < b`.
pub fn construct_base_case(a: usize, b: usize, p: PrimeModulus) -> Result<Element> {
    let lambda = Partition2::new(a, b)?;
    let beta = crate::numtheory::p_adic_length(b as u64, p)?;
    if checked_pow(p, beta) != Some(b as u64) {
        return Err(Error::Precondition(format!("{b} is not a power of {p}")));
    }
    let top = checked_pow(p, p_adic_val(a as u64 + 1, p)?).expect("divides a + 1");
    if top >= b as u64 {
        return Err(Error::Precondition(format!(
            "p^nu(a+1) = {top} is not below b = {b}, so the constant design absorbs the base element"
        )));
    }
    self_check(base_element(lambda.a(), lambda.b(), p)?, "base case")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    Top,
    Bottom,
}

/// Moves `u` onto `[n]` with `n = n0 + |Y|`, avoiding `Y` order-preservingly,
/// then puts `Y` into every tabloid's bottom row (the `b`-subset) or top row.
pub fn adjoin(u: &Element, y: BSubset, row: Row) -> Result<Element> {
    let n = u.ground() + y.len();
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    if y.mask() >> n != 0 {
        return Err(Error::Size(format!("{y} is not inside [{n}]")));
    }
    let block = match row {
        Row::Top => u.block(),
        Row::Bottom => u.block() + y.len(),
    };
    Element::from_terms(
        n,
        block,
        u.modulus(),
        u.terms().map(|(s, c)| {
            let moved = s.relabel_avoiding(y, n);
            match row {
                Row::Top => (moved, c),
                Row::Bottom => (moved.union(y), c),
            }
        }),
    )
}

/// `sum_Y w(Y) u_Y` over `bhat`-subsets `Y` of `[a + b]`, where `u_Y` is
/// `base` with `Y` adjoined to the bottom row.
fn weighted_adjoin_sum(
    base: &Element,
    ground: usize,
    bhat: usize,
    weight: impl Fn(BSubset) -> u32,
) -> Result<Element> {
    let p = base.modulus();
    let mut out = Element::zero(ground, base.block() + bhat, p)?;
    for y in k_subsets(ground, bhat) {
        let w = weight(y);
        if w != 0 {
            out.axpy_assign(w, &adjoin(base, y, Row::Bottom)?)?;
        }
    }
    Ok(out)
}

/// A Hemmer element for a pointed `(a, b)`, `b = p^beta + bhat`.
///
/// With `U` a non-null `bhat`-design of block size `b - 1` on `[a + b]`,
/// `sum_X U(X) sum_{Y ⊆ X} u_Y` regroups as `sum_Y psi_{bhat}(U)(Y) u_Y`,
/// and the shadow of `U` is constant. So once `U` is known to exist the
/// element is a multiple of the plain sum over all `Y`.
pub fn construct_pointed(a: usize, b: usize, p: PrimeModulus) -> Result<Element> {
    let lambda = Partition2::new(a, b)?;
    let c = classify(lambda, p);
    let (Kind::Pointed, Some(beta), Some(bhat)) = (c.kind, c.beta, c.bhat) else {
        return Err(Error::NotPointed { a, b, p: p.get() });
    };
    let q = checked_pow(p, beta).expect("p^beta <= b") as usize;
    if bhat == 0 {
        return construct_base_case(a, b, p);
    }
    let params = DesignParams::new(a + b, b - 1, bhat, Some(p))?;
    if !wilson_exists(params)? {
        return Err(Error::Contract(format!(
            "no non-null {bhat}-design of block size {} on [{}]",
            b - 1,
            a + b
        )));
    }
    let base = construct_base_case(a, q, p)?;
    self_check(weighted_adjoin_sum(&base, a + b, bhat, |_| 1)?, "pointed")
}

/// The integer spectrum `C(a + b - s, a) / p^d` of the James construction,
/// with `d` the least valuation.
pub fn james_spectrum(a: usize, b: usize, p: PrimeModulus) -> Result<Vec<BigInt>> {
    let n = (a + b) as u64;
    let vals = (0..b as u64)
        .map(|s| binom_val_p(n - s, a as u64, p))
        .collect::<Result<Vec<u32>>>()?;
    let d = *vals.iter().min().ok_or(Error::ZeroArgument)?;
    let scale = BigInt::from(p.get()).pow(d);
    Ok((0..b)
        .map(|s| big_binomial(a + b - s, a) / &scale)
        .collect())
}

fn big_binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A Hemmer element for a James `(a, b)`: an integral universal design with
/// the scaled binomial spectrum, reduced mod p.
pub fn construct_james(a: usize, b: usize, p: PrimeModulus) -> Result<Element> {
    let lambda = Partition2::new(a, b)?;
    if classify(lambda, p).kind != Kind::James {
        return Err(Error::NotJames { a, b, p: p.get() });
    }
    let mu = james_spectrum(a, b, p)?;
    let design = construct_integral_design(a + b, b, b - 1, &mu)?;
    self_check(design.reduce(p), "James")
}

/// Splits a universal `w` for a pointed shape as `u' + alpha f` where `u'`
/// has zero shadow constants away from level `bhat`.
pub fn decompose_pointed(w: &Element) -> Result<(Element, u32)> {
    let lambda = w.partition()?;
    let p = w.modulus();
    let c = classify(lambda, p);
    let (Kind::Pointed, Some(bhat)) = (c.kind, c.bhat) else {
        return Err(Error::NotPointed {
            a: lambda.a(),
            b: lambda.b(),
            p: p.get(),
        });
    };
    let mu_w = spectrum(w).values().ok_or(Error::NotUniversal)?;
    let f = constant_element(lambda.n(), lambda.b(), p, 1);
    let mu_f = constant_spectrum(lambda.n(), lambda.b(), p);
    let x = poset_x(lambda, p);
    let large = x
        .components
        .iter()
        .find(|comp| !comp.contains(&bhat))
        .ok_or_else(|| {
            Error::Contract(format!(
                "poset for ({}, {}) has one component",
                lambda.a(),
                lambda.b()
            ))
        })?;
    let v = *large
        .iter()
        .find(|&&v| mu_f[v] != 0)
        .ok_or_else(|| Error::Contract("f vanishes on the large component".into()))?;
    let alpha = p.mul(mu_w[v], p.inv(mu_f[v])?);
    let u = w.axpy(p.neg(alpha), &f)?;
    let rest = spectrum(&u)
        .values()
        .expect("difference of universal designs");
    if rest.iter().enumerate().any(|(j, &m)| j != bhat && m != 0) {
        return Err(Error::Contract(format!(
            "residual spectrum {rest:?} is not supported at {bhat}"
        )));
    }
    Ok((u, alpha))
}
