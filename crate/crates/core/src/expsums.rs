//! Exponential sums
//!
//! ```text
//! S(a)   = sum_x (-1)^(Tr_m(a x) + Tr_k(x^(d(2^k+1))))
//! S_i(a) = sum_y (-1)^(Tr_m(c_i a y^(2^l+1)) + Tr_k(y^(2^k+1))),  c = 1, r, r^-1
//! ```
//!
//! over GF(2^m), for `a` in the subfield. `S(a)` for all `a` at once comes from
//! one Walsh-Hadamard transform of `x -> Tr_k(x^(d(2^k+1)))`.

use rayon::prelude::*;
use serde::Serialize;

use crate::dobbertin::{gcd, make_lparams};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::sequences::{check_decimation, CorrDistribution};
use crate::zerocount::{classify_m, linearized_kernel_l, MClass, Method};

/// Largest extension degree accepted by the Walsh route.
pub const WHT_MAX_M: u32 = 26;

fn require_nonzero_subfield(ctx: &FieldCtx, a: Elem) -> Result<()> {
    if !ctx.is_subfield(a) {
        return Err(Error::NotInSubfield(a.0));
    }
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(())
}

#[inline]
fn sign(bit: u8) -> i64 {
    1 - 2 * bit as i64
}

/// `S(a)` by summing over every x in GF(2^m).
pub fn s_naive(ctx: &FieldCtx, d: u64, a: Elem) -> Result<i64> {
    require_nonzero_subfield(ctx, a)?;
    check_decimation(ctx, d)?;
    let e = (d % ctx.sub_order()) * ((1u64 << ctx.k()) + 1);
    Ok(ctx
        .elements()
        .map(|x| sign(ctx.trace_m(ctx.mul(a, x)) ^ ctx.trace_k_unchecked(ctx.pow(x, e))))
        .sum())
}

/// In-place unnormalized Walsh-Hadamard transform.
pub fn fwht(buf: &mut [i64]) {
    let n = buf.len();
    assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in buf.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

/// `(-1)^f` over all bit vectors x, with `f(x) = Tr_k(x^(d(2^k+1)))`.
///
/// For `x = alpha^t`, `x^(2^k+1) = beta^t`, so `f(alpha^t) = u_(dt)`, the
/// decimated short sequence.
fn signed_power_trace(ctx: &FieldCtx, d: u64) -> Vec<i64> {
    let n = ctx.sub_order();
    let u: Vec<u8> = ctx.subfield_nonzero().into_iter().map(|b| ctx.trace_k_unchecked(b)).collect();
    let mut buf = vec![1i64; ctx.size()];
    let mut x = Elem::ONE;
    let step = d % n;
    let mut idx = 0u64;
    for _ in 0..ctx.order() {
        buf[x.0 as usize] = sign(u[idx as usize]);
        x = ctx.mul_alpha(x);
        idx += step;
        if idx >= n {
            idx -= n;
        }
    }
    buf
}

/// `S(a)` for every `a` in GF(2^k)^*, in the order `beta^0, beta^1, ...`.
pub fn s_all_wht(ctx: &FieldCtx, d: u64) -> Result<Vec<(Elem, i64)>> {
    check_decimation(ctx, d)?;
    if ctx.m() > WHT_MAX_M {
        return Err(Error::PreconditionViolated(format!(
            "Walsh route needs m <= {WHT_MAX_M}, got m = {}",
            ctx.m()
        )));
    }
    let mut buf = signed_power_trace(ctx, d);
    fwht(&mut buf);
    Ok(ctx
        .subfield_nonzero()
        .into_iter()
        .map(|a| (a, buf[ctx.gram_index(a) as usize]))
        .collect())
}

/// Multiset of `S(a)` over GF(2^k)^*.
pub fn s_distribution(ctx: &FieldCtx, d: u64) -> Result<CorrDistribution> {
    Ok(CorrDistribution::from_values(s_all_wht(ctx, d)?.into_iter().map(|(_, s)| s)))
}

/// Multiplier selecting `S_0`, `S_1` or `S_2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    /// multiplier 1
    S0,
    /// multiplier r
    S1,
    /// multiplier r^-1
    S2,
}

impl TryFrom<u32> for Component {
    type Error = Error;

    fn try_from(which: u32) -> Result<Self> {
        match which {
            0 => Ok(Component::S0),
            1 => Ok(Component::S1),
            2 => Ok(Component::S2),
            w => Err(Error::PreconditionViolated(format!("component {w} not in {{0, 1, 2}}"))),
        }
    }
}

fn component_multiplier(ctx: &FieldCtx, l: u32, which: Component) -> Result<Elem> {
    if l == 0 || l >= ctx.k() {
        return Err(Error::PreconditionViolated(format!("need 0 < l < k, got l = {l}")));
    }
    Ok(match which {
        Component::S0 => Elem::ONE,
        Component::S1 | Component::S2 => {
            if ctx.k() % 2 == 0 {
                return Err(Error::PreconditionViolated("S_1, S_2 need k odd".into()));
            }
            let r = ctx.r().ok_or_else(|| Error::NoncubeUnavailable("no r".into()))?;
            if which == Component::S1 {
                r
            } else {
                ctx.inv(r)?
            }
        }
    })
}

/// `S_i(a)` by summing over every y in GF(2^m).
pub fn s_component(ctx: &FieldCtx, l: u32, a: Elem, which: Component) -> Result<i64> {
    if !ctx.is_subfield(a) {
        return Err(Error::NotInSubfield(a.0));
    }
    let ca = ctx.mul(component_multiplier(ctx, l, which)?, a);
    let k = ctx.k();
    Ok(ctx
        .elements()
        .map(|y| {
            let q = ctx.mul(ctx.frobenius(y, l), y);
            let norm = ctx.mul(ctx.frobenius(y, k), y);
            sign(ctx.trace_m(ctx.mul(ca, q)) ^ ctx.trace_k_unchecked(norm))
        })
        .sum())
}

/// `S_i(a)` for every `a` in GF(2^k)^*, ordered as [`s_all_wht`].
///
/// The map `y -> y^(2^l+1)` is not injective, so the signs are first summed
/// into `g(w) = sum over y^(2^l+1) = w of (-1)^Tr_k(y^(2^k+1))` and then
/// `S_i(a) = sum_w g(w) (-1)^Tr_m(c_i a w)` is read off the transform of g.
pub fn s_component_all(ctx: &FieldCtx, l: u32, which: Component) -> Result<Vec<(Elem, i64)>> {
    let c = component_multiplier(ctx, l, which)?;
    if ctx.m() > WHT_MAX_M {
        return Err(Error::PreconditionViolated(format!(
            "Walsh route needs m <= {WHT_MAX_M}, got m = {}",
            ctx.m()
        )));
    }
    let k = ctx.k();
    let mut buf = vec![0i64; ctx.size()];
    for y in ctx.elements() {
        let w = ctx.mul(ctx.frobenius(y, l), y);
        buf[w.0 as usize] += sign(ctx.trace_k_unchecked(ctx.mul(ctx.frobenius(y, k), y)));
    }
    fwht(&mut buf);
    Ok(ctx
        .subfield_nonzero()
        .into_iter()
        .map(|a| (a, buf[ctx.gram_index(ctx.mul(c, a)) as usize]))
        .collect())
}

/// The exponent i with `d(2^l+1) = 2^i (mod 2^k-1)`, if any.
pub fn pair_exponent(k: u32, d: u64, l: u32) -> Option<u32> {
    let n = (1u64 << k) - 1;
    let lhs = (d % n) * ((1u64 << l) + 1) % n;
    (0..k).find(|&i| (1u64 << i) % n == lhs)
}

/// One row of a decomposition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumReport {
    #[serde(rename = "a_hex")]
    pub a: Elem,
    #[serde(rename = "S")]
    pub s: i64,
    #[serde(rename = "S0")]
    pub s0: i64,
    #[serde(rename = "S1")]
    pub s1: Option<i64>,
    #[serde(rename = "S2")]
    pub s2: Option<i64>,
    #[serde(rename = "Ta")]
    pub ta: Option<u64>,
    pub class: MClass,
    pub l: u32,
    pub d: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub k: u32,
    pub d: u64,
    pub l: u32,
    pub i: u32,
    pub rows: Vec<SumReport>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Check the splitting of `S(a)` into `S_0`, `S_1`, `S_2` for every nonzero
/// subfield `a`, together with `S_1 = S_2` and `S_1^2 = 2^m T_a`. All sums
/// come from the transform routes.
pub fn decomposition_check(ctx: &FieldCtx, d: u64, l: u32) -> Result<DecompositionReport> {
    let k = ctx.k();
    check_decimation(ctx, d)?;
    let lp = make_lparams(k, l)?;
    let i = pair_exponent(k, d, l).ok_or(Error::InvalidPair { d, l, k })?;
    debug_assert_eq!(gcd(d, ctx.sub_order()), 1);
    let odd = l % 2 == 1;
    let pk = 1i64 << k;
    let values = |w: Component| -> Result<Vec<i64>> {
        Ok(s_component_all(ctx, l, w)?.into_iter().map(|(_, v)| v).collect())
    };
    let sv: Vec<i64> = s_all_wht(ctx, d)?.into_iter().map(|(_, v)| v).collect();
    let s0v = values(Component::S0)?;
    let (s1v, s2v) = if odd { (values(Component::S1)?, values(Component::S2)?) } else { (Vec::new(), Vec::new()) };
    let elems = ctx.subfield_nonzero();
    let rows: Vec<(SumReport, Vec<String>)> = (0..elems.len())
        .into_par_iter()
        .map(|j| -> Result<(SumReport, Vec<String>)> {
            let (a, s, s0) = (elems[j], sv[j], s0v[j]);
            let class = classify_m(ctx, &lp, a)?;
            let mut fails = Vec::new();
            let (s1, s2, ta) = if odd {
                let (s1, s2) = (s1v[j], s2v[j]);
                let ta = linearized_kernel_l(ctx, &lp, a, Method::Kernel)?.count;
                if 3 * s != s0 + s1 + s2 {
                    fails.push(format!("a={a}: 3S = {} != S0+S1+S2 = {}", 3 * s, s0 + s1 + s2));
                }
                if s1 != s2 {
                    fails.push(format!("a={a}: S1 = {s1} != S2 = {s2}"));
                }
                if s1 * s1 != (1i64 << ctx.m()) * ta as i64 {
                    fails.push(format!("a={a}: S1^2 = {} != 2^m T_a = 2^m * {ta}", s1 * s1));
                }
                (Some(s1), Some(s2), Some(ta))
            } else {
                if s != s0 {
                    fails.push(format!("a={a}: S = {s} != S0 = {s0}"));
                }
                (None, None, None)
            };
            if ![0, pk, -2 * pk].contains(&s) {
                fails.push(format!("a={a}: S = {s} not in {{0, 2^k, -2^(k+1)}}"));
            }
            let row = SumReport { a, s, s0, s1, s2, ta, class, l, d };
            Ok((row, fails))
        })
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut out = Vec::with_capacity(rows.len());
    for (row, f) in rows {
        out.push(row);
        failures.extend(f);
    }
    Ok(DecompositionReport { k, d, l, i, pass: failures.is_empty(), rows: out, failures })
}

/// `S_0(a)` predicted from the class of `a` and the parity of l; k odd.
pub fn s0_by_class(k: u32, l: u32, class: MClass) -> Result<i64> {
    if k % 2 == 0 {
        return Err(Error::EvenK(k));
    }
    let pk = 1i64 << k;
    Ok(match (l % 2 == 0, class) {
        (true, MClass::M4) => -2 * pk,
        (true, MClass::M2) => 0,
        (true, MClass::M1) => pk,
        (false, MClass::M4) => -4 * pk,
        (false, MClass::M2) => 2 * pk,
        (false, MClass::M1) => -pk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zerocount::v0;
    use rand::{Rng, SeedableRng};

    fn coprime(n: u64) -> Vec<u64> {
        (1..n).filter(|&d| gcd(d, n) == 1).collect()
    }

    #[test]
    fn fwht_small() {
        let mut v = vec![1, -1, -1, 1];
        fwht(&mut v);
        assert_eq!(v, vec![0, 0, 0, 4]);
    }

    #[test]
    fn walsh_matches_naive_exhaustive() {
        for k in [3u32, 5] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for d in coprime(ctx.sub_order()) {
                for (a, s) in s_all_wht(&ctx, d).unwrap() {
                    assert_eq!(s, s_naive(&ctx, d, a).unwrap(), "k={k} d={d} a={a}");
                }
            }
        }
    }

    #[test]
    fn walsh_matches_naive_sampled_k7() {
        let ctx = FieldCtx::new(7, None).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let ds = coprime(127);
        let sub = ctx.subfield_nonzero();
        for _ in 0..20 {
            let d = ds[rng.random_range(0..ds.len())];
            let all = s_all_wht(&ctx, d).unwrap();
            for _ in 0..5 {
                let j = rng.random_range(0..sub.len());
                assert_eq!(all[j].1, s_naive(&ctx, d, sub[j]).unwrap());
            }
        }
    }

    #[test]
    fn component_transform_matches_naive() {
        for (k, l) in [(3u32, 1u32), (3, 2), (5, 1), (5, 2), (5, 3), (4, 1)] {
            let ctx = FieldCtx::new(k, None).unwrap();
            let comps: &[Component] =
                if k % 2 == 1 { &[Component::S0, Component::S1, Component::S2] } else { &[Component::S0] };
            for &w in comps {
                for (a, v) in s_component_all(&ctx, l, w).unwrap() {
                    assert_eq!(v, s_component(&ctx, l, a, w).unwrap(), "k={k} l={l} {w:?} a={a}");
                }
            }
        }
    }

    #[test]
    fn three_valued_spectra() {
        let ctx = FieldCtx::new(3, None).unwrap();
        assert_eq!(
            s_distribution(&ctx, 3).unwrap(),
            CorrDistribution::from_pairs([(-16, 1), (0, 3), (8, 3)])
        );
        for d in coprime(7) {
            assert!(s_distribution(&ctx, d).unwrap().entries.keys().all(|s| s % 4 == 0));
        }
        let ctx = FieldCtx::new(5, None).unwrap();
        let dist = s_distribution(&ctx, 7).unwrap();
        assert_eq!(dist, CorrDistribution::from_pairs([(-64, 5), (0, 15), (32, 11)]));
        assert_eq!(dist.sum(), 32);
    }

    #[test]
    fn s0_matches_class_table() {
        for (k, l) in [(3u32, 1u32), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4)] {
            let ctx = FieldCtx::new(k, None).unwrap();
            let lp = make_lparams(k, l).unwrap();
            for a in ctx.subfield_nonzero() {
                let c = classify_m(&ctx, &lp, a).unwrap();
                let s0 = s_component(&ctx, l, a, Component::S0).unwrap();
                assert_eq!(s0, s0_by_class(k, l, c).unwrap(), "k={k} l={l} a={a} {c:?}");
            }
        }
        let ctx = FieldCtx::new(3, None).unwrap();
        let lp = make_lparams(3, 1).unwrap();
        let m2 = ctx.subfield_nonzero().into_iter().find(|&a| classify_m(&ctx, &lp, a).unwrap() == MClass::M2).unwrap();
        assert_eq!(s_component(&ctx, 1, m2, Component::S0).unwrap(), 16);
        let m1 = ctx.subfield_nonzero().into_iter().find(|&a| classify_m(&ctx, &lp, a).unwrap() == MClass::M1).unwrap();
        assert_eq!(s_component(&ctx, 1, m1, Component::S0).unwrap(), -8);
    }

    #[test]
    fn decomposition_small() {
        let ctx = FieldCtx::new(3, None).unwrap();
        let rep = decomposition_check(&ctx, 3, 1).unwrap();
        assert!(rep.pass, "{:?}", rep.failures);
        assert_eq!(rep.rows.len(), 7);
        for row in &rep.rows {
            if row.class == MClass::M2 {
                assert_eq!(row.s1, Some(-8));
            }
        }
        let ctx = FieldCtx::new(5, None).unwrap();
        let rep = decomposition_check(&ctx, 11, 1).unwrap();
        assert!(rep.pass, "{:?}", rep.failures);
        for row in &rep.rows {
            assert!([32, -32, 64, -64].contains(&row.s1.unwrap()));
        }
        let lp = make_lparams(5, 1).unwrap();
        for row in &rep.rows {
            // Tr_k(v_0) = 0 forces T_a = 1.
            if ctx.trace_k_unchecked(v0(&ctx, &lp, row.a).unwrap()) == 0 {
                assert_eq!(row.ta, Some(1));
            }
        }
        let rep = decomposition_check(&ctx, 7, 2).unwrap();
        assert!(rep.pass, "{:?}", rep.failures);
        assert!(rep.rows.iter().all(|r| r.s1.is_none()));
        assert_eq!(decomposition_check(&ctx, 3, 1), Err(Error::InvalidPair { d: 3, l: 1, k: 5 }));
    }

    #[test]
    fn sum_report_json_shape() {
        let ctx = FieldCtx::new(3, None).unwrap();
        let rep = decomposition_check(&ctx, 3, 1).unwrap();
        let v = serde_json::to_value(&rep.rows[0]).unwrap();
        for key in ["a_hex", "S", "S0", "S1", "S2", "Ta", "class"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn argument_errors() {
        let ctx = FieldCtx::new(3, None).unwrap();
        assert_eq!(s_naive(&ctx, 3, Elem::ZERO), Err(Error::ZeroArgument));
        assert_eq!(s_naive(&ctx, 7, Elem::ONE), Err(Error::BadDecimation { d: 7, k: 3 }));
        assert_eq!(s_naive(&ctx, 3, ctx.alpha()), Err(Error::NotInSubfield(ctx.alpha().0)));
        let ctx4 = FieldCtx::new(4, None).unwrap();
        assert!(s_component(&ctx4, 1, Elem::ONE, Component::S1).is_err());
        assert!(Component::try_from(3).is_err());
        assert_eq!(s0_by_class(4, 1, MClass::M1), Err(Error::EvenK(4)));
    }
}
