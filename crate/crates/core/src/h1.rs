//! Classification of two-part partitions and a brute-force count of
//! Hemmer extensions.
//!
//! The count is the dimension of the space `D` of elements satisfying the
//! first Hemmer condition (every `psi_{1,v}(u)` is a multiple of the fixed
//! vector) modulo the span of `S^lambda` and `f_lambda`.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::designs::condition_space;
use crate::error::{Error, Result};
use crate::numtheory::{
    all_binoms_divisible, checked_pow, p_adic_length, p_adic_val, PrimeModulus,
};
use crate::subset::binomial;
use crate::tabloid::{f_lambda, james_check, specht_membership, GeneralPartition, Partition2};

/// Column budget for [`brute_force_h1`] unless one is given.
pub const DEFAULT_BUDGET: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    James,
    Pointed,
    Neither,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::James => "James",
            Kind::Pointed => "Pointed",
            Kind::Neither => "Neither",
        })
    }
}

/// `beta` and `bhat` are set exactly for pointed partitions: those with
/// `b = p^beta + bhat` and `bhat < p^nu(a+1) < p^beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    pub beta: Option<u32>,
    pub bhat: Option<usize>,
}

pub fn classify(lambda: Partition2, p: PrimeModulus) -> Classification {
    let (a, b) = (lambda.a() as u64, lambda.b() as u64);
    if all_binoms_divisible(a, b, p) {
        return Classification {
            kind: Kind::James,
            beta: None,
            bhat: None,
        };
    }
    let beta = p_adic_length(b, p).expect("b >= 1");
    let q = checked_pow(p, beta).expect("p^beta <= b");
    let bhat = b - q;
    // p^nu(a+1) is at most a + 1, so it cannot overflow
    let top = checked_pow(p, p_adic_val(a + 1, p).expect("a + 1 >= 1")).expect("divides a + 1");
    // the weaker bound top < b admits shapes such as (5, 4) at p = 3 which
    // carry no Hemmer element
    if bhat < top && top < q {
        Classification {
            kind: Kind::Pointed,
            beta: Some(beta),
            bhat: Some(bhat as usize),
        }
    } else {
        Classification {
            kind: Kind::Neither,
            beta: None,
            bhat: None,
        }
    }
}

pub fn predicted_h1(lambda: Partition2, p: PrimeModulus) -> usize {
    match classify(lambda, p).kind {
        Kind::James | Kind::Pointed => 1,
        Kind::Neither => 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Report {
    pub a: usize,
    pub b: usize,
    pub p: PrimeModulus,
    #[serde(rename = "dim_S")]
    pub dim_s: usize,
    #[serde(rename = "dim_D")]
    pub dim_d: usize,
    #[serde(rename = "f_in_S")]
    pub f_in_s: bool,
    pub quotient: usize,
    pub predicted: usize,
}

/// One elimination of the stacked inclusion matrices augmented by a scalar
/// column per level gives `dim D` (its nullity) and `dim S` (the nullity of
/// the unaugmented prefix).
pub fn brute_force_h1(lambda: Partition2, p: PrimeModulus, budget: usize) -> Result<H1Report> {
    let (a, b, n) = (lambda.a(), lambda.b(), lambda.n());
    let cols = binomial(n, b) as usize;
    if cols > budget {
        return Err(Error::BudgetExceeded { cols, budget });
    }
    let levels: Vec<usize> = (0..b).collect();
    let space = condition_space(n, b, &levels, p, false)?;
    let f_in_s = specht_membership(&f_lambda(lambda, p));
    if f_in_s != james_check(&GeneralPartition::from(lambda), p) {
        return Err(Error::Contract(format!(
            "f membership disagrees with the James test for ({a},{b})"
        )));
    }
    let quotient = space
        .dim
        .checked_sub(space.null_dim + usize::from(!f_in_s))
        .ok_or_else(|| Error::Contract(format!("negative quotient for ({a},{b})")))?;
    Ok(H1Report {
        a,
        b,
        p,
        dim_s: space.null_dim,
        dim_d: space.dim,
        f_in_s,
        quotient,
        predicted: predicted_h1(lambda, p),
    })
}

/// One line of a survey: the oracle's counts next to the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub a: usize,
    pub b: usize,
    pub p: u32,
    pub kind: Kind,
    pub beta: Option<u32>,
    pub bhat: Option<usize>,
    #[serde(rename = "dim_S")]
    pub dim_s: usize,
    #[serde(rename = "dim_D")]
    pub dim_d: usize,
    #[serde(rename = "f_in_S")]
    pub f_in_s: bool,
    pub quotient: usize,
    pub predicted: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl SurveyRow {
    /// Whether the row agrees with the classification: the quotient is the
    /// predicted count and `dim D - dim S` is 2 exactly on pointed shapes.
    pub fn consistent(&self) -> bool {
        let gap = if self.kind == Kind::Pointed { 2 } else { 1 };
        self.matches && self.dim_d == self.dim_s + gap
    }
}

fn survey_row(lambda: Partition2, p: PrimeModulus, budget: usize) -> Result<SurveyRow> {
    let c = classify(lambda, p);
    let r = brute_force_h1(lambda, p, budget)?;
    Ok(SurveyRow {
        a: r.a,
        b: r.b,
        p: p.get(),
        kind: c.kind,
        beta: c.beta,
        bhat: c.bhat,
        dim_s: r.dim_s,
        dim_d: r.dim_d,
        f_in_s: r.f_in_s,
        quotient: r.quotient,
        predicted: r.predicted,
        matches: r.quotient == r.predicted,
    })
}

/// Every `(a, b)` with `a >= b >= 1` and `a + b <= n_max`, ordered by `n`
/// then `b`.
pub fn partitions_up_to(n_max: usize) -> Vec<Partition2> {
    (2..=n_max)
        .flat_map(|n| (1..=n / 2).map(move |b| (n - b, b)))
        .filter_map(|(a, b)| Partition2::new(a, b).ok())
        .collect()
}

/// Runs the oracle on every partition up to `n_max`, skipping those over
/// budget. Rows come back in [`partitions_up_to`] order.
pub fn survey(n_max: usize, p: PrimeModulus, budget: usize) -> Result<Vec<SurveyRow>> {
    partitions_up_to(n_max)
        .into_par_iter()
        .filter(|l| binomial(l.n(), l.b()) as usize <= budget)
        .map(|l| survey_row(l, p, budget))
        .collect()
}

/// Partitions up to `n_max` where the oracle disagrees with the
/// classification; empty when the two agree everywhere.
pub fn check_main_theorem(n_max: usize, p: PrimeModulus) -> Result<Vec<SurveyRow>> {
    let rows: Result<Vec<SurveyRow>> = partitions_up_to(n_max)
        .into_par_iter()
        .map(|l| survey_row(l, p, usize::MAX))
        .collect();
    Ok(rows?.into_iter().filter(|r| !r.consistent()).collect())
}

pub fn write_survey<W: Write>(rows: &[SurveyRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_survey<R: Read>(input: R) -> Result<Vec<SurveyRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}
