//! The long m-sequence `s_t = Tr_m(alpha^t)`, the decimated short sequence
//! `v_t = u_(dt)` with `u_t = Tr_k(beta^t)`, and their periodic crosscorrelation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dobbertin::gcd;
use crate::error::{Error, Result};
use crate::expsums;
use crate::field::{Elem, FieldCtx};

/// Largest k for which the direct O(2^m * 2^k) correlation is the primary route.
pub const DIRECT_MAX_K: u32 = 7;

/// A binary sequence of one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSeq {
    pub bits: Vec<u8>,
}

impl BitSeq {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Periodic autocorrelation at `shift`.
    pub fn autocorrelation(&self, shift: usize) -> i64 {
        let n = self.len();
        (0..n)
            .map(|t| if self.bits[t] == self.bits[(t + shift) % n] { 1 } else { -1 })
            .sum()
    }
}

/// Value -> multiplicity of a correlation or exponential-sum spectrum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrDistribution {
    pub entries: BTreeMap<i64, u64>,
    pub total: u64,
}

impl CorrDistribution {
    pub fn from_values<I: IntoIterator<Item = i64>>(values: I) -> Self {
        let mut dist = CorrDistribution::default();
        for v in values {
            *dist.entries.entry(v).or_default() += 1;
            dist.total += 1;
        }
        dist
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut dist = CorrDistribution::default();
        for (v, c) in pairs {
            if c > 0 {
                *dist.entries.entry(v).or_default() += c;
                dist.total += c;
            }
        }
        dist
    }

    /// Number of distinct values.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn count(&self, value: i64) -> u64 {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    /// The same multiset with `delta` added to every value.
    pub fn shifted(&self, delta: i64) -> Self {
        CorrDistribution {
            entries: self.entries.iter().map(|(&v, &c)| (v + delta, c)).collect(),
            total: self.total,
        }
    }

    /// `value,count` rows sorted by value, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (v, c) in &self.entries {
            writeln!(out, "{v},{c}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }

    pub fn sum(&self) -> i128 {
        self.entries.iter().map(|(&v, &c)| v as i128 * c as i128).sum()
    }

    pub fn sum_sq(&self) -> i128 {
        self.entries.iter().map(|(&v, &c)| (v as i128) * (v as i128) * c as i128).sum()
    }
}

pub(crate) fn check_decimation(ctx: &FieldCtx, d: u64) -> Result<()> {
    if gcd(d, ctx.sub_order()) != 1 {
        return Err(Error::BadDecimation { d, k: ctx.k() });
    }
    Ok(())
}

/// `s_t = Tr_m(alpha^t)` for `t` in `[0, 2^m - 1)`.
pub fn long_seq(ctx: &FieldCtx) -> BitSeq {
    let mut bits = Vec::with_capacity(ctx.order() as usize);
    let mut x = Elem::ONE;
    for _ in 0..ctx.order() {
        bits.push(ctx.trace_m(x));
        x = ctx.mul_alpha(x);
    }
    BitSeq { bits }
}

/// `u_t = Tr_k(beta^t)` for `t` in `[0, 2^k - 1)`.
fn base_short_seq(ctx: &FieldCtx) -> Vec<u8> {
    ctx.subfield_nonzero().into_iter().map(|b| ctx.trace_k_unchecked(b)).collect()
}

/// `v_t = u_(dt mod 2^k-1)`.
pub fn short_seq(ctx: &FieldCtx, d: u64) -> Result<BitSeq> {
    check_decimation(ctx, d)?;
    let u = base_short_seq(ctx);
    let n = ctx.sub_order();
    let bits = (0..n).map(|t| u[((d % n) * t % n) as usize]).collect();
    Ok(BitSeq { bits })
}

fn correlate(long: &BitSeq, short: &BitSeq, tau: usize) -> i64 {
    let p = short.len();
    let mut idx = tau % p;
    let mut agree = 0i64;
    for &s in &long.bits {
        agree += (s == short.bits[idx]) as i64;
        idx += 1;
        if idx == p {
            idx = 0;
        }
    }
    2 * agree - long.len() as i64
}

/// `C_d(tau) = sum_t (-1)^(s_t + v_(t+tau))`, short indices taken mod `2^k - 1`.
pub fn crosscorr(ctx: &FieldCtx, d: u64, tau: u64) -> Result<i64> {
    let short = short_seq(ctx, d)?;
    if tau >= ctx.sub_order() {
        return Err(Error::PreconditionViolated(format!(
            "shift {tau} outside [0, {})",
            ctx.sub_order()
        )));
    }
    Ok(correlate(&long_seq(ctx), &short, tau as usize))
}

/// `C_d(tau)` for every shift, computed from the sequences.
pub fn crosscorr_all(ctx: &FieldCtx, d: u64) -> Result<Vec<i64>> {
    let short = short_seq(ctx, d)?;
    let long = long_seq(ctx);
    Ok((0..short.len()).into_par_iter().map(|tau| correlate(&long, &short, tau)).collect())
}

/// Distribution of `C_d(tau)` directly from the sequences.
pub fn crosscorr_distribution_direct(ctx: &FieldCtx, d: u64) -> Result<CorrDistribution> {
    Ok(CorrDistribution::from_values(crosscorr_all(ctx, d)?))
}

/// Distribution of `C_d(tau)` over all shifts.
///
/// Up to [`DIRECT_MAX_K`] the sequences are correlated directly and the result
/// is checked against the Walsh spectrum of `S(a)` shifted by -1; above that
/// the Walsh route alone is used.
pub fn crosscorr_distribution(ctx: &FieldCtx, d: u64) -> Result<CorrDistribution> {
    check_decimation(ctx, d)?;
    let fast = expsums::s_distribution(ctx, d)?.shifted(-1);
    if ctx.k() > DIRECT_MAX_K {
        return Ok(fast);
    }
    let direct = crosscorr_distribution_direct(ctx, d)?;
    if direct != fast {
        return Err(Error::Mismatch(format!(
            "direct crosscorrelation {:?} != S(a) - 1 {:?} (k = {}, d = {d})",
            direct.entries,
            fast.entries,
            ctx.k()
        )));
    }
    Ok(direct)
}

/// Sum and sum of squares of the crosscorrelation values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub d: u64,
    pub sum: i128,
    pub sum_sq: i128,
    pub expected_sum: i128,
    pub expected_sum_sq: i128,
    pub pass: bool,
}

pub fn moment_check(ctx: &FieldCtx, d: u64) -> Result<MomentReport> {
    let dist = crosscorr_distribution(ctx, d)?;
    let expected_sum = 1;
    let expected_sum_sq = ctx.order() as i128 * ctx.sub_order() as i128 - 2;
    let (sum, sum_sq) = (dist.sum(), dist.sum_sq());
    Ok(MomentReport {
        d,
        sum,
        sum_sq,
        expected_sum,
        expected_sum_sq,
        pass: sum == expected_sum && sum_sq == expected_sum_sq,
    })
}
