//! Subsets of `[n]` as bitmasks, with colexicographic ranking.
//!
//! Bit `i` stands for the point `i + 1`. For subsets of equal size the natural
//! integer order of the masks is exactly colex order, so sorted containers
//! keyed by [`BSubset`] are already in canonical order.

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 63;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BSubset(u64);

impl BSubset {
    pub const EMPTY: BSubset = BSubset(0);

    #[inline]
    pub fn from_mask(mask: u64) -> Self {
        BSubset(mask)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    /// Builds a subset from 1-based members; they must be strictly increasing
    /// and lie in `[1, n]`.
    pub fn from_members(members: &[usize], n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        let mut mask = 0u64;
        let mut prev = 0usize;
        for &m in members {
            if m <= prev || m > n {
                return Err(Error::Schema(format!(
                    "set {members:?} is not strictly increasing within [1, {n}]"
                )));
            }
            mask |= 1 << (m - 1);
            prev = m;
        }
        Ok(BSubset(mask))
    }

    pub fn members(self) -> Vec<usize> {
        self.points().map(|i| i + 1).collect()
    }

    /// 0-based positions in increasing order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        self.0 >> point & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: BSubset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: BSubset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: BSubset) -> BSubset {
        BSubset(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: BSubset) -> BSubset {
        BSubset(self.0 & !other.0)
    }

    /// Colex rank among subsets of the same size.
    pub fn colex_rank(self) -> usize {
        self.points()
            .enumerate()
            .map(|(i, pos)| binomial(pos, i + 1) as usize)
            .sum()
    }

    /// Inverse of [`colex_rank`](Self::colex_rank) for `k`-subsets.
    pub fn colex_unrank(mut rank: usize, k: usize) -> BSubset {
        let mut mask = 0u64;
        for i in (1..=k).rev() {
            // largest pos with C(pos, i) <= rank
            let mut pos = i - 1;
            while binomial(pos + 1, i) as usize <= rank {
                pos += 1;
            }
            rank -= binomial(pos, i) as usize;
            mask |= 1 << pos;
        }
        BSubset(mask)
    }

    /// All `k`-subsets of this set, in colex order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = BSubset> {
        let points: Vec<usize> = self.points().collect();
        let n = points.len();
        KSubsets::new(n, k).map(move |local| {
            let mut mask = 0u64;
            for i in local.points() {
                mask |= 1 << points[i];
            }
            BSubset(mask)
        })
    }

    /// Pushes the set through the order-preserving injection whose image is
    /// the complement of `hole` in `[n]`.
    pub fn relabel_avoiding(self, hole: BSubset, n: usize) -> BSubset {
        let targets: Vec<usize> = (0..n).filter(|&i| !hole.contains(i)).collect();
        let mut mask = 0u64;
        for i in self.points() {
            mask |= 1 << targets[i];
        }
        BSubset(mask)
    }
}

impl std::fmt::Display for BSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the `k`-subsets of `[n]` in colex order (Gosper's hack).
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        let limit = 1u64 << n;
        let next = if k > n { None } else { Some((1u64 << k) - 1) };
        KSubsets { next, limit }
    }
}

impl Iterator for KSubsets {
    type Item = BSubset;

    fn next(&mut self) -> Option<BSubset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(BSubset(cur))
    }
}

pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets::new(n, k)
}

const fn pascal() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n < 65 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
            k += 1;
        }
        n += 1;
    }
    t
}

// C(64, 32) < 2^63, so the whole triangle fits
static PASCAL: [[u64; 65]; 65] = pascal();

/// Exact binomial coefficient; panics on overflow, which cannot happen for
/// `n <= 64`.
#[inline]
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n <= 64 {
        return PASCAL[n][k];
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}
