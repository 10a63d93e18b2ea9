//! Theorem-level checks, decimation classes and the three-valued search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::dobbertin::{
    a_from_x0, d_eval, gcd, h_trace_identity, lemma5_check, make_lparams, mod_inverse, q_identity, r_eval, LParams,
};
use crate::error::{Error, Result};
use crate::expsums::{decomposition_check, s0_by_class, s_component_all, s_distribution, Component};
use crate::field::{Elem, FieldCtx};
use crate::sequences::{crosscorr_distribution, moment_check, CorrDistribution};
use crate::zerocount::{
    a_poly, affine_zeros_a, classify_m, lemma3_check, lemma6_value, linearized_kernel_l, m2_trace_criterion,
    m_distribution, v0, MClass, MDistribution, Method,
};

/// Largest k for the default search; beyond it `long_run` is required.
pub const SEARCH_MAX_K: u32 = 11;
/// Largest k for the long-run search.
pub const LONG_RUN_MAX_K: u32 = 13;
/// Brute-force zero oracles for `A_a` run up to this k.
pub const A_BRUTE_MAX_K: u32 = 11;
/// Brute-force zero oracles for `L_a` run up to this m.
pub const L_BRUTE_MAX_M: u32 = 14;

/// A cyclotomic coset `{d 2^i mod 2^k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DecimationClass {
    pub rep: u64,
    pub coset: Vec<u64>,
    pub coprime: bool,
}

impl DecimationClass {
    pub fn of(k: u32, d: u64) -> Self {
        let n = (1u64 << k) - 1;
        let d = d % n;
        let coset: BTreeSet<u64> = (0..k).map(|i| (d << i) % n).collect();
        let coset: Vec<u64> = coset.into_iter().collect();
        DecimationClass { rep: coset[0], coprime: gcd(d, n) == 1, coset }
    }
}

fn l_values(k: u32) -> Vec<u32> {
    (1..k).filter(|&l| gcd(l as u64, k as u64) == 1).collect()
}

fn require_odd(k: u32) -> Result<()> {
    if k % 2 == 0 {
        return Err(Error::EvenK(k));
    }
    Ok(())
}

/// Every cyclotomic coset of `Z/(2^k-1)` except `{0}`, ordered by representative.
pub fn coset_reps(k: u32) -> Vec<DecimationClass> {
    let n = (1u64 << k) - 1;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for d in 1..n {
        if !seen[d as usize] {
            let class = DecimationClass::of(k, d);
            for &e in &class.coset {
                seen[e as usize] = true;
            }
            out.push(class);
        }
    }
    out
}

/// `d = 2^i / (2^l+1) mod 2^k-1`.
pub fn decimation_for(k: u32, l: u32, i: u32) -> Result<u64> {
    let n = (1u64 << k) - 1;
    let inv = mod_inverse(((1u64 << l) + 1) % n, n).ok_or(Error::EvenK(k))?;
    Ok(inv * ((1u64 << i) % n) % n)
}

/// Classes of d with `d(2^l+1) = 2^i` for some l coprime to k.
pub fn valid_decimations(k: u32) -> Result<Vec<DecimationClass>> {
    require_odd(k)?;
    if k < 3 {
        return Err(Error::PreconditionViolated(format!("need k >= 3, got {k}")));
    }
    let classes: BTreeSet<DecimationClass> = l_values(k)
        .into_iter()
        .map(|l| decimation_for(k, l, 0).map(|d| DecimationClass::of(k, d)))
        .collect::<Result<_>>()?;
    Ok(classes.into_iter().collect())
}

/// `(r, s, t, v)` with `r+s+t+v = 2^k-1`, `s-t-2v = 1`, `s+t+4v = 2^k-1` and the given `s+t`.
pub fn solve_distribution(k: u32, s_plus_t: u64) -> Result<(u64, u64, u64, u64)> {
    require_odd(k)?;
    let none = Error::NoSolution { k, s_plus_t };
    let n = (1u64 << k) - 1;
    let rest = n.checked_sub(s_plus_t).ok_or(none.clone())?;
    if rest % 4 != 0 {
        return Err(none);
    }
    let v = rest / 4;
    let twice_s = s_plus_t + 1 + 2 * v;
    if twice_s % 2 != 0 {
        return Err(none);
    }
    let s = twice_s / 2;
    let t = s_plus_t.checked_sub(s).ok_or(none.clone())?;
    let r = n.checked_sub(s + t + v).ok_or(none)?;
    Ok((r, s, t, v))
}

/// Values `0, 2^k, -2^k, -2^(k+1)` of `S(a)` with multiplicities `(r, s, t, v)`.
pub fn theorem2_distribution(k: u32) -> Result<CorrDistribution> {
    let (r, s, t, v) = solve_distribution(k, ((1u64 << k) + 1) / 3)?;
    let pk = 1i64 << k;
    Ok(CorrDistribution::from_pairs([(0, r), (pk, s), (-pk, t), (-2 * pk, v)]))
}

/// `C_d(tau)` spectrum for a valid d.
pub fn corollary1_distribution(k: u32) -> Result<CorrDistribution> {
    require_odd(k)?;
    let pk = 1i64 << k;
    let h = 1u64 << (k - 1);
    Ok(CorrDistribution::from_pairs([(-1 - 2 * pk, (h - 1) / 3), (-1, h - 1), (pk - 1, (2 * h + 1) / 3)]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub k: u32,
    pub found: Vec<DecimationClass>,
    pub predicted: Vec<DecimationClass>,
    pub conjecture_holds: bool,
    /// Every found class has the Theorem 2 spectrum.
    pub distributions_match: bool,
    pub cosets_checked: u64,
}

impl SearchReport {
    pub fn found_reps(&self) -> Vec<u64> {
        self.found.iter().map(|c| c.rep).collect()
    }
}

/// Walsh spectra of one d per coprime coset; classes with three distinct values.
pub fn search_three_valued(ctx: &FieldCtx, long_run: bool) -> Result<SearchReport> {
    let k = ctx.k();
    require_odd(k)?;
    let limit = if long_run { LONG_RUN_MAX_K } else { SEARCH_MAX_K };
    if k > limit {
        return Err(Error::PreconditionViolated(format!(
            "search at k = {k} needs {}",
            if long_run { "k <= 13" } else { "the long-run flag" }
        )));
    }
    let classes: Vec<DecimationClass> = coset_reps(k).into_iter().filter(|c| c.coprime).collect();
    let spectra: Vec<CorrDistribution> =
        classes.par_iter().map(|c| s_distribution(ctx, c.rep)).collect::<Result<_>>()?;
    let expected = theorem2_distribution(k)?;
    let mut found = Vec::new();
    let mut distributions_match = true;
    for (class, dist) in classes.iter().zip(&spectra) {
        if dist.distinct() == 3 {
            distributions_match &= *dist == expected;
            found.push(class.clone());
        }
    }
    let predicted = valid_decimations(k)?;
    Ok(SearchReport {
        k,
        conjecture_holds: found == predicted,
        found,
        predicted,
        distributions_match,
        cosets_checked: classes.len() as u64,
    })
}

/// Suite identifiers.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Lemma7,
    Lemma8,
    Lemma9,
    Theorem1,
    Theorem2,
    Corollary1,
    Corollary2,
    Conjecture1,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Lemma1,
        Theorem::Lemma2,
        Theorem::Lemma3,
        Theorem::Lemma4,
        Theorem::Lemma5,
        Theorem::Lemma6,
        Theorem::Lemma7,
        Theorem::Lemma8,
        Theorem::Lemma9,
        Theorem::Theorem1,
        Theorem::Theorem2,
        Theorem::Corollary1,
        Theorem::Corollary2,
        Theorem::Conjecture1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Lemma1 => "lemma1",
            Theorem::Lemma2 => "lemma2",
            Theorem::Lemma3 => "lemma3",
            Theorem::Lemma4 => "lemma4",
            Theorem::Lemma5 => "lemma5",
            Theorem::Lemma6 => "lemma6",
            Theorem::Lemma7 => "lemma7",
            Theorem::Lemma8 => "lemma8",
            Theorem::Lemma9 => "lemma9",
            Theorem::Theorem1 => "theorem1",
            Theorem::Theorem2 => "theorem2",
            Theorem::Corollary1 => "corollary1",
            Theorem::Corollary2 => "corollary2",
            Theorem::Conjecture1 => "conjecture1",
        }
    }

    /// Whether the suite is only defined for odd k.
    pub fn needs_odd_k(self) -> bool {
        !matches!(
            self,
            Theorem::Lemma1
                | Theorem::Lemma2
                | Theorem::Lemma3
                | Theorem::Lemma4
                | Theorem::Lemma5
                | Theorem::Theorem1
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or(Error::UnknownTheorem(s))
    }
}

/// Comma-separated suite names; `all` selects every suite.
pub fn parse_suites(list: &str) -> Result<Vec<Theorem>> {
    if list.trim() == "all" {
        return Ok(Theorem::ALL.to_vec());
    }
    let set: BTreeSet<Theorem> = list.split(',').map(str::parse).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// One failing input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub l: Option<u32>,
    pub d: Option<u64>,
    pub a: Option<Elem>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub k: u32,
    pub l: Option<u32>,
    pub d: Option<u64>,
    pub pass: bool,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: u64,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    bad: Vec<Counterexample>,
}

impl Tally {
    fn check(&mut self, ok: bool, l: Option<u32>, d: Option<u64>, a: Option<Elem>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.bad.push(Counterexample { l, d, a, detail: detail() });
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.bad.extend(other.bad);
    }
}

/// Run `f` on every nonzero subfield element in parallel and merge in order.
fn per_a<F>(ctx: &FieldCtx, include_zero: bool, f: F) -> Result<Tally>
where
    F: Fn(Elem) -> Result<Tally> + Sync + Send,
{
    let elems = if include_zero { ctx.subfield_elements() } else { ctx.subfield_nonzero() };
    let parts: Vec<Tally> = elems.into_par_iter().map(f).collect::<Result<_>>()?;
    let mut out = Tally::default();
    for p in parts {
        out.absorb(p);
    }
    Ok(out)
}

fn lparams_all(k: u32) -> Result<Vec<LParams>> {
    l_values(k).into_iter().map(|l| make_lparams(k, l)).collect()
}

fn lemma1(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    let n = ctx.sub_order();
    for d in (1..n).filter(|&d| gcd(d, n) == 1) {
        let rep = moment_check(ctx, d)?;
        t.check(rep.pass, None, Some(d), None, || {
            format!("sum = {}, sum_sq = {} (expected 1, {})", rep.sum, rep.sum_sq, rep.expected_sum_sq)
        });
    }
    Ok(t)
}

/// Zeros of `A_a` contain `R(a^-1)`, brute and kernel agree, and D, R are inverse permutations.
fn lemma2(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in lparams_all(ctx.k())? {
        let l = Some(lp.l);
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            let v = v0(ctx, &lp, a)?;
            t.check(a_poly(ctx, &lp, a, v).is_zero(), l, None, Some(a), || format!("A_a(R(a^-1)) != 0 at v0 = {v}"));
            if ctx.k() <= A_BRUTE_MAX_K {
                let brute = affine_zeros_a(ctx, &lp, a, Method::Brute)?;
                let kern = affine_zeros_a(ctx, &lp, a, Method::Kernel)?;
                t.check(brute.zeros == kern.zeros, l, None, Some(a), || {
                    format!("brute {:?} != kernel {:?}", brute.zeros, kern.zeros)
                });
            }
            let dv = d_eval(ctx, &lp, a)?;
            let back = r_eval(ctx, &lp, ctx.inv(dv)?)?;
            t.check(back == a, l, None, Some(a), || format!("R(1/D(a)) = {back}"));
            Ok(t)
        })?);
        let image: BTreeSet<Elem> =
            ctx.subfield_nonzero().into_iter().map(|v| d_eval(ctx, &lp, v)).collect::<Result<_>>()?;
        t.check(
            image.len() as u64 == ctx.sub_order() && !image.contains(&Elem::ZERO),
            l,
            None,
            None,
            || format!("D has {} distinct nonzero values", image.len()),
        );
    }
    Ok(t)
}

fn lemma3(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in lparams_all(ctx.k())? {
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            t.check(lemma3_check(ctx, &lp, a)?, Some(lp.l), None, Some(a), || "trace identity fails".into());
            Ok(t)
        })?);
    }
    Ok(t)
}

fn lemma4(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in lparams_all(ctx.k())? {
        let l = Some(lp.l);
        t.absorb(per_a(ctx, true, |v| {
            let mut t = Tally::default();
            for i in 1..=lp.l_prime {
                t.check(h_trace_identity(ctx, &lp, i, v)?, l, None, Some(v), || {
                    format!("Tr_k(H_{i}(v)) != Tr_k(1 + (1+v)^e({i}))")
                });
            }
            if !v.is_zero() {
                t.check(q_identity(ctx, &lp, v)?, l, None, Some(v), || "Q identity fails at x0 = a".into());
            }
            Ok(t)
        })?);
    }
    Ok(t)
}

fn lemma5(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in lparams_all(ctx.k())? {
        t.absorb(per_a(ctx, false, |x0| {
            let mut t = Tally::default();
            match a_from_x0(ctx, &lp, x0) {
                Err(Error::DegenerateX0(_)) => {}
                Err(e) => return Err(e),
                Ok(_) => t.check(lemma5_check(ctx, &lp, x0)?, Some(lp.l), None, Some(x0), || {
                    "trace identity fails at x0 = a".into()
                }),
            }
            Ok(t)
        })?);
    }
    Ok(t)
}

fn odd_lparams(k: u32) -> Result<Vec<LParams>> {
    Ok(lparams_all(k)?.into_iter().filter(|lp| lp.l % 2 == 1).collect())
}

fn lemma6(ctx: &FieldCtx) -> Result<Tally> {
    let r = ctx.r().ok_or_else(|| Error::NoncubeUnavailable("field has no noncube r".into()))?;
    let mut t = Tally::default();
    for lp in odd_lparams(ctx.k())? {
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            let zeros = linearized_kernel_l(ctx, &lp, a, Method::Kernel)?
                .zeros
                .ok_or_else(|| Error::Mismatch("L_a has too many zeros to list".into()))?;
            for z in zeros {
                let val = lemma6_value(ctx, &lp, r, a, z);
                let want = if z.is_zero() { Elem::ZERO } else { Elem::ONE };
                t.check(val == want, Some(lp.l), None, Some(a), || format!("z = {z}: value {val}, expected {want}"));
            }
            Ok(t)
        })?);
    }
    Ok(t)
}

fn lemma7(ctx: &FieldCtx) -> Result<Tally> {
    let omega = ctx.exp(ctx.order() / 3);
    let mut t = Tally::default();
    for lp in odd_lparams(ctx.k())? {
        let l = Some(lp.l);
        t.absorb(per_a(ctx, true, |a| {
            let mut t = Tally::default();
            let rep = linearized_kernel_l(ctx, &lp, a, Method::Kernel)?;
            let ta = rep.count;
            t.check(ta == 1 || ta == 4, l, None, Some(a), || format!("T_a = {ta}"));
            if a.is_zero() {
                t.check(ta == 1, l, None, Some(a), || format!("T_0 = {ta}"));
            } else if ctx.trace_k_unchecked(v0(ctx, &lp, a)?) == 0 {
                t.check(ta == 1, l, None, Some(a), || format!("Tr_k(v0) = 0 but T_a = {ta}"));
            }
            if let Some(zeros) = &rep.zeros {
                let set: BTreeSet<Elem> = zeros.iter().copied().collect();
                let closed = zeros.iter().all(|&z| {
                    set.contains(&ctx.mul(omega, z)) && zeros.iter().all(|&w| set.contains(&(z + w)))
                });
                t.check(closed, l, None, Some(a), || "zero set is not a GF(4)-subspace".into());
            }
            if ctx.m() <= L_BRUTE_MAX_M {
                let brute = linearized_kernel_l(ctx, &lp, a, Method::Brute)?;
                t.check(brute.zeros == rep.zeros, l, None, Some(a), || {
                    format!("brute {:?} != kernel {:?}", brute.zeros, rep.zeros)
                });
            }
            Ok(t)
        })?);
    }
    Ok(t)
}

fn s0_table(ctx: &FieldCtx, l: u32) -> Result<BTreeMap<Elem, i64>> {
    Ok(s_component_all(ctx, l, Component::S0)?.into_iter().collect())
}

/// `S_0` through `N_a` and `v_0 = R(a^-1)`: l odd gives `2^k (-1)^Tr(v0) N_a`,
/// l even gives `2^k (-1)^((l'+1) Tr(v0) + l') (N_a - 2)`.
fn lemma8(ctx: &FieldCtx) -> Result<Tally> {
    let k = ctx.k();
    let pk = 1i64 << k;
    let mut t = Tally::default();
    for lp in lparams_all(k)? {
        let s0_all = s0_table(ctx, lp.l)?;
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            let s0 = s0_all[&a];
            let na = classify_m(ctx, &lp, a)?.zeros() as i64;
            let tr = ctx.trace_k_unchecked(v0(ctx, &lp, a)?) as u32;
            let want = if lp.l % 2 == 1 {
                pk * (-1i64).pow(tr) * na
            } else {
                pk * (-1i64).pow((lp.l_prime + 1) * tr + lp.l_prime) * (na - 2)
            };
            t.check(s0 == want, Some(lp.l), None, Some(a), || format!("S_0 = {s0}, expected {want} (N_a = {na})"));
            Ok(t)
        })?);
    }
    Ok(t)
}

fn lemma9(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in odd_lparams(ctx.k())? {
        let d = decimation_for(ctx.k(), lp.l, 0)?;
        let rep = decomposition_check(ctx, d, lp.l)?;
        t.checked += rep.rows.len() as u64;
        t.bad.extend(rep.failures.into_iter().map(|detail| Counterexample { l: Some(lp.l), d: Some(d), a: None, detail }));
    }
    Ok(t)
}

fn theorem1(ctx: &FieldCtx) -> Result<Tally> {
    let k = ctx.k();
    let want = MDistribution::predicted(k);
    let mut t = Tally::default();
    for lp in lparams_all(k)? {
        let got = m_distribution(ctx, &lp)?;
        t.check(got == want, Some(lp.l), None, None, || format!("{got:?} != {want:?}"));
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            let is_m2 = classify_m(ctx, &lp, a)? == MClass::M2;
            let crit = m2_trace_criterion(ctx, &lp, a)?;
            t.check(is_m2 == (crit == 1), Some(lp.l), None, Some(a), || {
                format!("Tr_k(v0 + 1) = {crit} but a in M2 is {is_m2}")
            });
            Ok(t)
        })?);
    }
    Ok(t)
}

/// Measured `(r, s, t, v)` tallies of the Walsh spectrum.
fn tallies(k: u32, dist: &CorrDistribution) -> (u64, u64, u64, u64) {
    let pk = 1i64 << k;
    (dist.count(0), dist.count(pk), dist.count(-pk), dist.count(-2 * pk))
}

fn theorem2(ctx: &FieldCtx) -> Result<Tally> {
    let k = ctx.k();
    let want = theorem2_distribution(k)?;
    let solved = solve_distribution(k, ((1u64 << k) + 1) / 3)?;
    let mut t = Tally::default();
    for class in valid_decimations(k)? {
        let d = Some(class.rep);
        let dist = s_distribution(ctx, class.rep)?;
        t.check(dist == want, None, d, None, || format!("{:?} != {:?}", dist.entries, want.entries));
        let got = tallies(k, &dist);
        t.check(got == solved, None, d, None, || format!("tallies {got:?} != solution {solved:?}"));
    }
    Ok(t)
}

fn corollary1(ctx: &FieldCtx) -> Result<Tally> {
    let want = corollary1_distribution(ctx.k())?;
    let mut t = Tally::default();
    for class in valid_decimations(ctx.k())? {
        let dist = crosscorr_distribution(ctx, class.rep)?;
        t.check(dist == want, None, Some(class.rep), None, || {
            format!("{:?} != {:?}", dist.entries, want.entries)
        });
    }
    Ok(t)
}

fn corollary2(ctx: &FieldCtx) -> Result<Tally> {
    let mut t = Tally::default();
    for lp in lparams_all(ctx.k())? {
        let s0_all = s0_table(ctx, lp.l)?;
        t.absorb(per_a(ctx, false, |a| {
            let mut t = Tally::default();
            let class = classify_m(ctx, &lp, a)?;
            let s0 = s0_all[&a];
            let want = s0_by_class(ctx.k(), lp.l, class)?;
            t.check(s0 == want, Some(lp.l), None, Some(a), || format!("{class:?}: S_0 = {s0}, expected {want}"));
            Ok(t)
        })?);
    }
    Ok(t)
}

fn conjecture1(ctx: &FieldCtx) -> Result<Tally> {
    let k = ctx.k();
    let rep = search_three_valued(ctx, false)?;
    let mut t = Tally { checked: rep.cosets_checked, ..Default::default() };
    let fmt_reps = |cs: &[DecimationClass]| cs.iter().map(|c| c.rep).collect::<Vec<_>>();
    if !rep.conjecture_holds {
        t.bad.push(Counterexample {
            l: None,
            d: None,
            a: None,
            detail: format!("found {:?}, predicted {:?}", fmt_reps(&rep.found), fmt_reps(&rep.predicted)),
        });
    }
    if !rep.distributions_match {
        t.bad.push(Counterexample { l: None, d: None, a: None, detail: "a found class has another spectrum".into() });
    }
    let half_phi = l_values(k).len() / 2;
    if k > 3 && rep.predicted.len() != half_phi {
        t.bad.push(Counterexample {
            l: None,
            d: None,
            a: None,
            detail: format!("{} valid classes, expected phi(k)/2 = {half_phi}", rep.predicted.len()),
        });
    }
    Ok(t)
}

/// Check coset invariance of the Walsh spectrum over every member of every coset.
pub fn coset_invariance(ctx: &FieldCtx) -> Result<bool> {
    for class in coset_reps(ctx.k()).into_iter().filter(|c| c.coprime) {
        let base = s_distribution(ctx, class.rep)?;
        for &d in &class.coset[1..] {
            if s_distribution(ctx, d)? != base {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn run_one(ctx: &FieldCtx, which: Theorem) -> Result<Tally> {
    if which.needs_odd_k() {
        require_odd(ctx.k())?;
    }
    match which {
        Theorem::Lemma1 => lemma1(ctx),
        Theorem::Lemma2 => lemma2(ctx),
        Theorem::Lemma3 => lemma3(ctx),
        Theorem::Lemma4 => lemma4(ctx),
        Theorem::Lemma5 => lemma5(ctx),
        Theorem::Lemma6 => lemma6(ctx),
        Theorem::Lemma7 => lemma7(ctx),
        Theorem::Lemma8 => lemma8(ctx),
        Theorem::Lemma9 => lemma9(ctx),
        Theorem::Theorem1 => theorem1(ctx),
        Theorem::Theorem2 => theorem2(ctx),
        Theorem::Corollary1 => corollary1(ctx),
        Theorem::Corollary2 => corollary2(ctx),
        Theorem::Conjecture1 => conjecture1(ctx),
    }
}

/// Run the named suites in the given order, one report each.
pub fn run_suite(ctx: &FieldCtx, which: &[Theorem]) -> Result<Vec<VerifyReport>> {
    if which.is_empty() {
        return Err(Error::PreconditionViolated("no suite selected".into()));
    }
    which
        .iter()
        .map(|&th| {
            let start = Instant::now();
            let tally = run_one(ctx, th)?;
            Ok(VerifyReport {
                theorem: th,
                k: ctx.k(),
                l: None,
                d: None,
                pass: tally.bad.is_empty(),
                checked: tally.checked,
                counterexamples: tally.bad,
                wall_time_ms: start.elapsed().as_millis() as u64,
            })
        })
        .collect()
}

/// Table 1 facsimile: found coset minima for each odd k with `2k <= max_m`.
pub fn table1(max_m: u32, long_run: bool) -> Result<BTreeMap<u32, SearchReport>> {
    let mut out = BTreeMap::new();
    for k in (3..=max_m / 2).step_by(2) {
        let ctx = FieldCtx::new(k, None)?;
        out.insert(2 * k, search_three_valued(&ctx, long_run)?);
    }
    Ok(out)
}
