//! Dobbertin's polynomial families over GF(2^k) and the reduced polynomials
//! `H_i` used to count zeros of `A_a(v)`.
//!
//! All arguments are subfield elements of a [`FieldCtx`]; exponents are kept
//! modulo `2^k - 1`, which is exact for nonzero arguments. Every exponent that
//! appears is a positive integer, so a zero argument always evaluates to zero.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i128) as u64)
}

/// Parameters derived from `l`: its inverse `l'` modulo k and the table of
/// `e(i) = 1 + 2^l + ... + 2^((i-1)l)` reduced modulo `2^k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LParams {
    pub k: u32,
    pub l: u32,
    pub l_prime: u32,
    /// `e_table[i - 1] = e(i) mod 2^k-1` for `i = 1..=l'`.
    pub e_table: Vec<u64>,
}

pub fn make_lparams(k: u32, l: u32) -> Result<LParams> {
    if l == 0 || l >= k || gcd(l as u64, k as u64) != 1 {
        return Err(Error::NotCoprime { k, l });
    }
    let l_prime = if k == 1 { 1 } else { mod_inverse(l as u64, k as u64).unwrap() as u32 };
    let lp = LParams { k, l, l_prime, e_table: Vec::new() };
    let n = lp.modulus();
    let mut e_table = Vec::with_capacity(l_prime as usize);
    let mut acc = 0u64;
    for j in 0..l_prime {
        acc = (acc + lp.pow2(j as u64 * l as u64)) % n;
        e_table.push(acc);
    }
    Ok(LParams { e_table, ..lp })
}

impl LParams {
    /// 2^k - 1.
    #[inline]
    pub fn modulus(&self) -> u64 {
        (1u64 << self.k) - 1
    }

    /// `2^j mod 2^k-1`.
    #[inline]
    pub fn pow2(&self, j: u64) -> u64 {
        (1u64 << (j % self.k as u64)) % self.modulus()
    }

    /// `e(i) mod 2^k-1`, 1-based.
    pub fn e(&self, i: u32) -> u64 {
        self.e_table[(i - 1) as usize]
    }

    /// Bit positions (mod k) of the binary support of `e(i)`.
    pub fn e_support(&self, i: u32) -> Vec<u32> {
        (0..i).map(|j| (j * self.l) % self.k).collect()
    }
}

/// `v^e` for a subfield element and an exponent reduced mod `2^k-1` whose
/// unreduced value is positive.
#[inline]
fn spow(ctx: &FieldCtx, v: Elem, e: u64) -> Elem {
    if v.is_zero() {
        Elem::ZERO
    } else {
        ctx.pow(v, e)
    }
}

fn require_subfield(ctx: &FieldCtx, v: Elem) -> Result<()> {
    if ctx.is_subfield(v) {
        Ok(())
    } else {
        Err(Error::NotInSubfield(v.0))
    }
}

/// `(F_i(v), G_i(v))` by running the two-term recursion from the base cases.
pub fn fg_eval(ctx: &FieldCtx, lp: &LParams, i: u32, v: Elem) -> Result<(Elem, Elem)> {
    require_subfield(ctx, v)?;
    if i == 0 {
        return Err(Error::PreconditionViolated("F_i, G_i are indexed from 1".into()));
    }
    let l = lp.l as u64;
    let n = lp.modulus();
    let mut f = (v, spow(ctx, v, (lp.pow2(l) + 1) % n));
    let mut g = (Elem::ZERO, spow(ctx, v, (lp.pow2(l) + n - 1) % n));
    if i == 1 {
        return Ok((f.0, g.0));
    }
    // f = (F_j, F_{j+1}) with j starting at 1.
    for j in 1..(i as u64 - 1) {
        let big = lp.pow2((j + 1) * l);
        let c1 = ctx.frobenius(v, (((j + 1) * l) % lp.k as u64) as u32);
        let c0 = spow(ctx, v, (big + n - lp.pow2(j * l)) % n);
        f = (f.1, ctx.mul(c1, f.1) + ctx.mul(c0, f.0));
        g = (g.1, ctx.mul(c1, g.1) + ctx.mul(c0, g.0));
    }
    Ok((f.1, g.1))
}

/// `R(v) = F_1(v) + ... + F_{l'}(v) + G_{l'}(v)`.
pub fn r_eval(ctx: &FieldCtx, lp: &LParams, v: Elem) -> Result<Elem> {
    require_subfield(ctx, v)?;
    let l = lp.l as u64;
    let n = lp.modulus();
    let mut f = (Elem::ZERO, v);
    let mut g = (Elem::ZERO, Elem::ZERO);
    let mut sum = v;
    for j in 1..lp.l_prime as u64 {
        // advance from (F_{j-1}, F_j) to (F_j, F_{j+1})
        let next_f;
        let next_g;
        if j == 1 {
            next_f = spow(ctx, v, (lp.pow2(l) + 1) % n);
            next_g = spow(ctx, v, (lp.pow2(l) + n - 1) % n);
        } else {
            let c1 = ctx.frobenius(v, ((j * l) % lp.k as u64) as u32);
            let c0 = spow(ctx, v, (lp.pow2(j * l) + n - lp.pow2((j - 1) * l)) % n);
            next_f = ctx.mul(c1, f.1) + ctx.mul(c0, f.0);
            next_g = ctx.mul(c1, g.1) + ctx.mul(c0, g.0);
        }
        f = (f.1, next_f);
        g = (g.1, next_g);
        sum += next_f;
    }
    Ok(sum + g.1)
}

/// `D(v) = (v^(2^l) + v^(2^2l) + ... + v^(2^(l'l)) + (l'+1)) / v^(2^l+1)`.
pub fn d_eval(ctx: &FieldCtx, lp: &LParams, v: Elem) -> Result<Elem> {
    require_subfield(ctx, v)?;
    if v.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut num = ctx.int(lp.l_prime as u64 + 1);
    for i in 1..=lp.l_prime {
        num += ctx.frobenius(v, (i * lp.l) % lp.k);
    }
    let den = ctx.mul(ctx.frobenius(v, lp.l), v);
    ctx.div(num, den)
}

/// A GF(2) polynomial in v with all coefficients 1, stored by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExpSet {
    pub exponents: BTreeSet<u64>,
    pub constant: bool,
}

impl ExpSet {
    fn toggle(&mut self, e: u64) {
        if !self.exponents.remove(&e) {
            self.exponents.insert(e);
        }
    }

    pub fn len(&self) -> usize {
        self.exponents.len() + self.constant as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn eval(&self, ctx: &FieldCtx, v: Elem) -> Elem {
        let mut acc = if self.constant { Elem::ONE } else { Elem::ZERO };
        for &e in &self.exponents {
            acc += spow(ctx, v, e);
        }
        acc
    }
}

impl fmt::Display for ExpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.constant {
            parts.push("0".into());
        }
        parts.extend(self.exponents.iter().map(|e| e.to_string()));
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `H_i = [1 + (1+v)^e(i)]` built symbolically. Each nonempty subset `S` of
/// the binary support `{0, l, ..., (i-1)l}` of `e(i)` contributes the exact
/// integer exponent `sum_{j in S} 2^(jl)`; shifting it right until odd divides
/// by `2^(min(S) l)`. The shifted exponent is then stored modulo `2^k-1`, and
/// equal terms cancel in pairs.
pub fn h_expset(lp: &LParams, i: u32) -> Result<ExpSet> {
    if i == 0 || i > lp.l_prime {
        return Err(Error::PreconditionViolated(format!(
            "H_i needs 1 <= i <= l' = {}",
            lp.l_prime
        )));
    }
    let n = lp.modulus();
    let mut out = ExpSet { exponents: BTreeSet::new(), constant: false };
    for subset in 1u64..(1u64 << i) {
        let low = subset.trailing_zeros() as u64;
        let e = (0..i as u64)
            .filter(|j| subset >> j & 1 == 1)
            .map(|j| lp.pow2((j - low) * lp.l as u64))
            .sum::<u64>()
            % n;
        if e == 0 {
            out.constant = !out.constant;
        } else {
            out.toggle(e);
        }
    }
    Ok(out)
}

/// `H_i(v) = v (1 + (1+v)^(e(2)-1) + ... + (1+v)^(e(i)-1))`.
pub fn h_eval(ctx: &FieldCtx, lp: &LParams, i: u32, v: Elem) -> Result<Elem> {
    require_subfield(ctx, v)?;
    if i == 0 || i > lp.l_prime {
        return Err(Error::PreconditionViolated(format!(
            "H_i needs 1 <= i <= l' = {}",
            lp.l_prime
        )));
    }
    let n = lp.modulus();
    let w = v + Elem::ONE;
    let mut inner = Elem::ONE;
    for j in 2..=i {
        inner += spow(ctx, w, (lp.e(j) + n - 1) % n);
    }
    Ok(ctx.mul(v, inner))
}

/// `Q(v) = (x0^(2^l+1) + x0) v^(2^l) + x0^2 v + x0`.
pub fn q_eval(ctx: &FieldCtx, lp: &LParams, x0: Elem, v: Elem) -> Result<Elem> {
    require_subfield(ctx, x0)?;
    require_subfield(ctx, v)?;
    if x0.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let coeff = ctx.mul(ctx.frobenius(x0, lp.l), x0) + x0;
    Ok(ctx.mul(coeff, ctx.frobenius(v, lp.l)) + ctx.mul(ctx.mul(x0, x0), v) + x0)
}

/// `Tr_k(H_i(v)) == Tr_k(1 + (1+v)^e(i))`.
pub fn h_trace_identity(ctx: &FieldCtx, lp: &LParams, i: u32, v: Elem) -> Result<bool> {
    let lhs = ctx.trace_k_unchecked(h_eval(ctx, lp, i, v)?);
    let rhs = ctx.trace_k_unchecked(Elem::ONE + spow(ctx, v + Elem::ONE, lp.e(i)));
    Ok(lhs == rhs)
}

/// `Q(H_{l'}(x0^-1)) == (1 + x0)(1 + x0^-1)^e(l')`.
pub fn q_identity(ctx: &FieldCtx, lp: &LParams, x0: Elem) -> Result<bool> {
    let xi = ctx.inv(x0).map_err(|_| Error::ZeroArgument)?;
    let h = h_eval(ctx, lp, lp.l_prime, xi)?;
    let lhs = q_eval(ctx, lp, x0, h)?;
    let rhs = ctx.mul(Elem::ONE + x0, spow(ctx, Elem::ONE + xi, lp.e(lp.l_prime)));
    Ok(lhs == rhs)
}

/// `a = x0^(2^l+1) + x0`, rejecting the degenerate inputs.
pub fn a_from_x0(ctx: &FieldCtx, lp: &LParams, x0: Elem) -> Result<Elem> {
    require_subfield(ctx, x0)?;
    if x0.is_zero() || x0 == Elem::ONE {
        return Err(Error::DegenerateX0(x0.0));
    }
    let a = ctx.mul(ctx.frobenius(x0, lp.l), x0) + x0;
    if a.is_zero() {
        return Err(Error::DegenerateX0(x0.0));
    }
    Ok(a)
}

/// `Tr_k(1 + (1 + x0^-1)^e(l')) == Tr_k(R(a^-1))` with `a = x0^(2^l+1) + x0`.
pub fn lemma5_check(ctx: &FieldCtx, lp: &LParams, x0: Elem) -> Result<bool> {
    let a = a_from_x0(ctx, lp, x0)?;
    let xi = ctx.inv(x0)?;
    let lhs = ctx.trace_k_unchecked(Elem::ONE + spow(ctx, Elem::ONE + xi, lp.e(lp.l_prime)));
    let rhs = ctx.trace_k_unchecked(r_eval(ctx, lp, ctx.inv(a)?)?);
    Ok(lhs == rhs)
}

/// Whether `R(a^-1) == H_{l'}(x0^-1)`; reported, never assumed either way.
pub fn r_equals_h(ctx: &FieldCtx, lp: &LParams, x0: Elem) -> Result<bool> {
    let a = a_from_x0(ctx, lp, x0)?;
    let r = r_eval(ctx, lp, ctx.inv(a)?)?;
    let h = h_eval(ctx, lp, lp.l_prime, ctx.inv(x0)?)?;
    Ok(r == h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    fn valid_ls(k: u32) -> Vec<u32> {
        (1..k).filter(|&l| gcd(l as u64, k as u64) == 1).collect()
    }

    #[test]
    fn lparams_examples() {
        let lp = make_lparams(5, 2).unwrap();
        assert_eq!(lp.l_prime, 3);
        assert_eq!(lp.e(3), 21);
        assert_eq!(21 * 3 % 31, 1);
        let lp = make_lparams(3, 1).unwrap();
        assert_eq!((lp.l_prime, lp.e(1)), (1, 1));
        assert_eq!(make_lparams(6, 2), Err(Error::NotCoprime { k: 6, l: 2 }));
        assert_eq!(make_lparams(5, 5), Err(Error::NotCoprime { k: 5, l: 5 }));
        assert_eq!(make_lparams(5, 0), Err(Error::NotCoprime { k: 5, l: 0 }));
    }

    #[test]
    fn lparams_invariants() {
        for k in 2..=16u32 {
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                assert_eq!(l * lp.l_prime % k, 1 % k);
                let n = lp.modulus();
                let two_l_minus_1 = (1u64 << l) - 1;
                assert_eq!(lp.e(lp.l_prime) * two_l_minus_1 % n, 1 % n, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn frobenius_l_prime_l_is_squaring() {
        for k in 2..=7u32 {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                for x in ctx.subfield_elements() {
                    assert_eq!(ctx.frobenius(x, lp.l_prime * l), ctx.mul(x, x));
                }
            }
        }
    }

    #[test]
    fn fg_base_cases_and_unrolled_f3() {
        let ctx = FieldCtx::new(5, None).unwrap();
        let lp = make_lparams(5, 2).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let sub = ctx.subfield_elements();
        for _ in 0..20 {
            let v = sub[rng.random_range(0..sub.len())];
            assert_eq!(fg_eval(&ctx, &lp, 1, v).unwrap(), (v, Elem::ZERO));
            // F_3 = v^(2^2l + 2^l + 1) + v^(2^2l - 2^l + 1), exponents computed exactly.
            let e1 = (1u64 << 4) + (1 << 2) + 1;
            let e2 = (1u64 << 4) - (1 << 2) + 1;
            let expect = ctx.pow(v, e1) + ctx.pow(v, e2);
            assert_eq!(fg_eval(&ctx, &lp, 3, v).unwrap().0, expect);
        }
        assert_eq!(fg_eval(&ctx, &lp, 1, Elem::ZERO).unwrap(), (Elem::ZERO, Elem::ZERO));
    }

    /// Exponent multisets of F_j, G_j from the recursion over exact integers,
    /// with equal pairs cancelled.
    fn symbolic_fg(l: u32, j: u32) -> (BTreeSet<i128>, BTreeSet<i128>) {
        let shift = |set: &BTreeSet<i128>, s: i128| -> Vec<i128> { set.iter().map(|e| e + s).collect() };
        let xor = |a: Vec<i128>, b: Vec<i128>| -> BTreeSet<i128> {
            let mut out = BTreeSet::new();
            for e in a.into_iter().chain(b) {
                if !out.remove(&e) {
                    out.insert(e);
                }
            }
            out
        };
        let p = |i: u32| -> i128 { 1i128 << (i * l) };
        let mut f = (BTreeSet::from([1i128]), BTreeSet::from([p(1) + 1]));
        let mut g = (BTreeSet::new(), BTreeSet::from([p(1) - 1]));
        for i in 1..j.saturating_sub(1) {
            let a = p(i + 1);
            let b = p(i + 1) - p(i);
            let nf = xor(shift(&f.1, a), shift(&f.0, b));
            let ng = xor(shift(&g.1, a), shift(&g.0, b));
            f = (f.1, nf);
            g = (g.1, ng);
        }
        if j == 1 {
            (f.0, g.0)
        } else {
            (f.1, g.1)
        }
    }

    fn signed_form(l: u32, j: u32, eps0: u32) -> BTreeSet<i128> {
        let mut out = BTreeSet::new();
        for eps in 0u32..(1 << j) {
            let bit = |i: u32| eps >> i & 1;
            if bit(j - 1) != 0 || bit(0) != eps0 {
                continue;
            }
            if (1..j).any(|i| bit(i) == 1 && bit(i - 1) == 1) {
                continue;
            }
            let e: i128 = (0..j).map(|i| if bit(i) == 1 { -(1i128 << (i * l)) } else { 1i128 << (i * l) }).sum();
            out.insert(e);
        }
        out
    }

    #[test]
    fn fg_exponent_structure() {
        for l in 1..=3u32 {
            for j in 2..=6u32 {
                let (f, g) = symbolic_fg(l, j);
                assert_eq!(f, signed_form(l, j, 0), "F l={l} j={j}");
                assert_eq!(g, signed_form(l, j, 1), "G l={l} j={j}");
            }
        }
    }

    #[test]
    fn r_collapses_for_l1_k3() {
        let ctx = FieldCtx::new(3, None).unwrap();
        let lp = make_lparams(3, 1).unwrap();
        for v in ctx.subfield_elements() {
            assert_eq!(r_eval(&ctx, &lp, v).unwrap(), v);
        }
    }

    #[test]
    fn r_matches_fg_sum() {
        for k in [5u32, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                for v in ctx.subfield_elements() {
                    let mut expect = Elem::ZERO;
                    for i in 1..=lp.l_prime {
                        expect += fg_eval(&ctx, &lp, i, v).unwrap().0;
                    }
                    expect += fg_eval(&ctx, &lp, lp.l_prime, v).unwrap().1;
                    assert_eq!(r_eval(&ctx, &lp, v).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn d_is_a_permutation_inverse_to_r() {
        for k in [3u32, 5, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                let nz = ctx.subfield_nonzero();
                let image: HashSet<Elem> = nz.iter().map(|&x| d_eval(&ctx, &lp, x).unwrap()).collect();
                assert_eq!(image.len(), nz.len(), "k={k} l={l}");
                assert!(!image.contains(&Elem::ZERO));
                for &x in &nz {
                    let y = ctx.inv(d_eval(&ctx, &lp, x).unwrap()).unwrap();
                    assert_eq!(r_eval(&ctx, &lp, y).unwrap(), x);
                }
            }
        }
        let ctx = FieldCtx::new(3, None).unwrap();
        let lp = make_lparams(3, 1).unwrap();
        assert_eq!(d_eval(&ctx, &lp, Elem::ZERO), Err(Error::ZeroArgument));
    }

    #[test]
    fn h_small_cases() {
        let ctx = FieldCtx::new(7, None).unwrap();
        for l in valid_ls(7) {
            let lp = make_lparams(7, l).unwrap();
            let pl = 1u64 << l;
            let p2l = lp.pow2(2 * l as u64);
            assert_eq!(h_expset(&lp, 1).unwrap(), ExpSet { exponents: [1].into(), constant: false });
            if lp.l_prime >= 2 {
                let h2 = h_expset(&lp, 2).unwrap();
                assert_eq!(h2.exponents, [(1 + pl) % 127].into());
            }
            if lp.l_prime >= 3 {
                let h3 = h_expset(&lp, 3).unwrap();
                let expect: BTreeSet<u64> = [1, (1 + p2l) % 127, (1 + pl + p2l) % 127].into();
                assert_eq!(h3.exponents, expect, "l={l}");
                for v in ctx.subfield_elements() {
                    let direct = v + ctx.pow(v, 1 + p2l) + ctx.pow(v, 1 + pl + p2l);
                    assert_eq!(h_eval(&ctx, &lp, 3, v).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn h_expset_agrees_with_closed_form() {
        for k in [3u32, 4, 5, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                for i in 1..=lp.l_prime {
                    let set = h_expset(&lp, i).unwrap();
                    for v in ctx.subfield_elements() {
                        assert_eq!(set.eval(&ctx, v), h_eval(&ctx, &lp, i, v).unwrap(), "k={k} l={l} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_term_count_recurrence() {
        for k in [5u32, 7, 9, 11] {
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                let mut prev = h_expset(&lp, 1).unwrap().len();
                assert_eq!(prev, 1);
                for i in 2..=lp.l_prime {
                    let cur = h_expset(&lp, i).unwrap().len();
                    assert_eq!(cur, (1 << (i - 1)) - prev, "k={k} l={l} i={i}");
                    prev = cur;
                }
            }
        }
    }

    #[test]
    fn expset_display() {
        let lp = make_lparams(5, 2).unwrap();
        assert_eq!(h_expset(&lp, 1).unwrap().to_string(), "[1]");
        assert_eq!(h_expset(&lp, 2).unwrap().to_string(), "[5]");
    }

    #[test]
    fn q_constant_term() {
        let ctx = FieldCtx::new(5, None).unwrap();
        let lp = make_lparams(5, 2).unwrap();
        for x0 in ctx.subfield_nonzero() {
            assert_eq!(q_eval(&ctx, &lp, x0, Elem::ZERO).unwrap(), x0);
        }
        assert_eq!(q_eval(&ctx, &lp, Elem::ZERO, Elem::ONE), Err(Error::ZeroArgument));
    }

    #[test]
    fn h_and_q_identities_exhaustive() {
        for k in [3u32, 4, 5, 6, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                for v in ctx.subfield_elements() {
                    for i in 1..=lp.l_prime {
                        assert!(h_trace_identity(&ctx, &lp, i, v).unwrap());
                    }
                }
                for x0 in ctx.subfield_nonzero() {
                    assert!(q_identity(&ctx, &lp, x0).unwrap(), "k={k} l={l} x0={x0}");
                }
            }
        }
    }

    #[test]
    fn lemma5_exhaustive() {
        for k in [3u32, 4, 5, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            for l in valid_ls(k) {
                let lp = make_lparams(k, l).unwrap();
                for x0 in ctx.subfield_elements() {
                    match lemma5_check(&ctx, &lp, x0) {
                        Ok(ok) => assert!(ok, "k={k} l={l} x0={x0}"),
                        Err(Error::DegenerateX0(_)) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
        let ctx = FieldCtx::new(3, None).unwrap();
        let lp = make_lparams(3, 1).unwrap();
        assert_eq!(lemma5_check(&ctx, &lp, Elem::ONE), Err(Error::DegenerateX0(1)));
        assert_eq!(lemma5_check(&ctx, &lp, Elem::ZERO), Err(Error::DegenerateX0(0)));
    }
}
