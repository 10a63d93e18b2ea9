//! Zeros of the affine polynomial `A_a(v)` and of `p_a(x)` over GF(2^k), and of
//! the linearized polynomial `L_a(z)` over GF(2^m).

use rayon::prelude::*;
use serde::Serialize;

use crate::dobbertin::{r_eval, LParams};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::linalg::{combine, kernel};

/// How a zero count was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Kernel,
}

/// Zero set of a polynomial over a finite field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroReport {
    pub count: u64,
    /// Sorted zeros; omitted when there are too many to list.
    pub zeros: Option<Vec<Elem>>,
    pub method: Method,
}

/// Zero sets larger than this are reported by count only.
const MAX_LISTED_ZEROS: u64 = 1 << 12;

impl ZeroReport {
    fn from_zeros(mut zeros: Vec<Elem>, method: Method) -> Self {
        zeros.sort_unstable();
        ZeroReport { count: zeros.len() as u64, zeros: Some(zeros), method }
    }
}

/// Which of `M_1`, `M_2`, `M_4` a nonzero `a` belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MClass {
    M1,
    M2,
    M4,
}

impl MClass {
    pub fn zeros(self) -> u64 {
        match self {
            MClass::M1 => 1,
            MClass::M2 => 2,
            MClass::M4 => 4,
        }
    }

    fn from_count(count: u64) -> Result<Self> {
        match count {
            1 => Ok(MClass::M1),
            2 => Ok(MClass::M2),
            4 => Ok(MClass::M4),
            n => Err(Error::Mismatch(format!("A_a has {n} zeros, expected 1, 2 or 4"))),
        }
    }
}

/// Class sizes `(|M_1|, |M_2|, |M_4|)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MDistribution {
    pub m1: u64,
    pub m2: u64,
    pub m4: u64,
}

impl MDistribution {
    /// Closed forms for the class sizes, by parity of k.
    pub fn predicted(k: u32) -> Self {
        let p = 1u64 << k;
        if k % 2 == 1 {
            MDistribution { m1: (p + 1) / 3, m2: p / 2 - 1, m4: (p / 2 - 1) / 3 }
        } else {
            MDistribution { m1: (p - 1) / 3, m2: p / 2, m4: (p / 2 - 2) / 3 }
        }
    }
}

fn require_nonzero_subfield(ctx: &FieldCtx, a: Elem) -> Result<()> {
    if !ctx.is_subfield(a) {
        return Err(Error::NotInSubfield(a.0));
    }
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(())
}

/// Homogeneous part `a^(2^l) v^(2^2l) + v^(2^l) + a v`.
#[inline]
pub fn a_homogeneous(ctx: &FieldCtx, lp: &LParams, a: Elem, v: Elem) -> Elem {
    let a_l = ctx.frobenius(a, lp.l);
    ctx.mul(a_l, ctx.frobenius(v, 2 * lp.l)) + ctx.frobenius(v, lp.l) + ctx.mul(a, v)
}

/// `A_a(v) = a^(2^l) v^(2^2l) + v^(2^l) + a v + 1`.
#[inline]
pub fn a_poly(ctx: &FieldCtx, lp: &LParams, a: Elem, v: Elem) -> Elem {
    a_homogeneous(ctx, lp, a, v) + Elem::ONE
}

/// The particular zero `v_0 = R(a^-1)` of `A_a`.
pub fn v0(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<Elem> {
    require_nonzero_subfield(ctx, a)?;
    r_eval(ctx, lp, ctx.inv(a)?)
}

/// Zeros of `A_a(v)` in GF(2^k).
///
/// `Method::Brute` evaluates at every subfield element. `Method::Kernel` takes
/// the kernel of the homogeneous part on the basis `beta^0, ..., beta^(k-1)` and
/// translates it by `v_0 = R(a^-1)`.
pub fn affine_zeros_a(ctx: &FieldCtx, lp: &LParams, a: Elem, method: Method) -> Result<ZeroReport> {
    require_nonzero_subfield(ctx, a)?;
    match method {
        Method::Brute => {
            let zeros = ctx
                .subfield_elements()
                .into_iter()
                .filter(|&v| a_poly(ctx, lp, a, v).is_zero())
                .collect();
            Ok(ZeroReport::from_zeros(zeros, Method::Brute))
        }
        Method::Kernel => {
            let basis: Vec<Elem> = ctx.subfield_nonzero().into_iter().take(ctx.k() as usize).collect();
            let cols: Vec<u64> = basis.iter().map(|&b| a_homogeneous(ctx, lp, a, b).0 as u64).collect();
            let ker = kernel(&cols);
            let base = v0(ctx, lp, a)?;
            if !a_poly(ctx, lp, a, base).is_zero() {
                return Err(Error::Mismatch(format!("R(a^-1) is not a zero of A_a for a = {a}")));
            }
            let zeros = ker.span().into_iter().map(|c| base + combine(&basis, Elem::ZERO, c)).collect();
            Ok(ZeroReport::from_zeros(zeros, Method::Kernel))
        }
    }
}

/// Zeros of `p_a(x) = x^(2^l+1) + x + a` in GF(2^k), by enumeration.
pub fn p_zeros(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<ZeroReport> {
    if !ctx.is_subfield(a) {
        return Err(Error::NotInSubfield(a.0));
    }
    let zeros = ctx
        .subfield_elements()
        .into_iter()
        .filter(|&x| (ctx.mul(ctx.frobenius(x, lp.l), x) + x + a).is_zero())
        .collect();
    Ok(ZeroReport::from_zeros(zeros, Method::Brute))
}

pub fn classify_m(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<MClass> {
    MClass::from_count(affine_zeros_a(ctx, lp, a, Method::Kernel)?.count)
}

/// Tally of the classes over all of GF(2^k)^*.
pub fn m_distribution(ctx: &FieldCtx, lp: &LParams) -> Result<MDistribution> {
    let classes: Vec<MClass> = ctx
        .subfield_nonzero()
        .into_par_iter()
        .map(|a| classify_m(ctx, lp, a))
        .collect::<Result<_>>()?;
    let mut dist = MDistribution::default();
    for c in classes {
        match c {
            MClass::M1 => dist.m1 += 1,
            MClass::M2 => dist.m2 += 1,
            MClass::M4 => dist.m4 += 1,
        }
    }
    Ok(dist)
}

/// `Tr_k(R(a^-1) + 1)`; equals 1 exactly on `M_2`.
pub fn m2_trace_criterion(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<u8> {
    let v = v0(ctx, lp, a)?;
    Ok(ctx.trace_k_unchecked(v + Elem::ONE))
}

/// Trace identities on the zeros `z` of `A_a`: `Tr_k(z) = Tr_k(v_0)`, and
/// `Tr_k(a z^(2^l+1))` equals `l' Tr_k(v_0) + Tr_k(l'+1)` at `z = v_0`, else
/// `l' Tr_k(v_0) + Tr_k(l')`.
pub fn lemma3_check(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<bool> {
    let base = v0(ctx, lp, a)?;
    let zeros = affine_zeros_a(ctx, lp, a, Method::Kernel)?.zeros.unwrap_or_default();
    let t0 = ctx.trace_k_unchecked(base);
    let lpr = lp.l_prime as u64;
    let scaled = ((lpr & 1) as u8) & t0;
    Ok(zeros.iter().all(|&z| {
        let tz = ctx.trace_k_unchecked(z);
        let lhs = ctx.trace_k_unchecked(ctx.mul(a, ctx.mul(ctx.frobenius(z, lp.l), z)));
        let rhs = if z == base {
            scaled ^ ctx.trace_k_int(lpr + 1)
        } else {
            scaled ^ ctx.trace_k_int(lpr)
        };
        tz == t0 && lhs == rhs
    }))
}

fn require_lemma7_hypotheses(ctx: &FieldCtx, lp: &LParams) -> Result<Elem> {
    if ctx.k() % 2 == 0 || lp.l % 2 == 0 {
        return Err(Error::PreconditionViolated(format!(
            "L_a needs k and l odd (k = {}, l = {})",
            ctx.k(),
            lp.l
        )));
    }
    ctx.r().ok_or_else(|| Error::NoncubeUnavailable("field has no noncube r".into()))
}

/// `L_a(z) = z^(2^(k+l)) + r^(2^l) a^(2^l) z^(2^2l) + r a z`.
#[inline]
pub fn l_poly(ctx: &FieldCtx, lp: &LParams, ra: Elem, z: Elem) -> Elem {
    let ra_l = ctx.frobenius(ra, lp.l);
    ctx.frobenius(z, ctx.k() + lp.l) + ctx.mul(ra_l, ctx.frobenius(z, 2 * lp.l)) + ctx.mul(ra, z)
}

/// Zeros of `L_a` in GF(2^m); the count is `T_a`.
pub fn linearized_kernel_l(ctx: &FieldCtx, lp: &LParams, a: Elem, method: Method) -> Result<ZeroReport> {
    let r = require_lemma7_hypotheses(ctx, lp)?;
    if !ctx.is_subfield(a) {
        return Err(Error::NotInSubfield(a.0));
    }
    let ra = ctx.mul(r, a);
    match method {
        Method::Brute => {
            let zeros = ctx.elements().filter(|&z| l_poly(ctx, lp, ra, z).is_zero()).collect();
            Ok(ZeroReport::from_zeros(zeros, Method::Brute))
        }
        Method::Kernel => {
            let basis: Vec<Elem> = (0..ctx.m()).map(|j| Elem(1 << j)).collect();
            let cols: Vec<u64> = basis.iter().map(|&b| l_poly(ctx, lp, ra, b).0 as u64).collect();
            let ker = kernel(&cols);
            let count = 1u64 << ker.nullity();
            if count > MAX_LISTED_ZEROS {
                return Ok(ZeroReport { count, zeros: None, method: Method::Kernel });
            }
            let zeros = ker.span().into_iter().map(|c| combine(&basis, Elem::ZERO, c)).collect();
            Ok(ZeroReport::from_zeros(zeros, Method::Kernel))
        }
    }
}

/// `a Tr_k^m(r z^(2^l+1)) ∈ {0, 1}` for every zero z of `L_a`.
pub fn lemma6_check(ctx: &FieldCtx, lp: &LParams, a: Elem) -> Result<bool> {
    let r = require_lemma7_hypotheses(ctx, lp)?;
    let zeros = linearized_kernel_l(ctx, lp, a, Method::Kernel)?
        .zeros
        .ok_or_else(|| Error::Mismatch("L_a has too many zeros to list".into()))?;
    Ok(zeros.iter().all(|&z| lemma6_value(ctx, lp, r, a, z).0 <= 1))
}

/// `a (U + U^(2^k))` with `U = r z^(2^l+1)`.
pub fn lemma6_value(ctx: &FieldCtx, lp: &LParams, r: Elem, a: Elem, z: Elem) -> Elem {
    let u = ctx.mul(r, ctx.mul(ctx.frobenius(z, lp.l), z));
    ctx.mul(a, ctx.trace_k_m(u))
}
