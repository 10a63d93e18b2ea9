//! Arithmetic in the tower GF(2^k) ⊂ GF(2^m), m = 2k.
//!
//! Elements are coefficient vectors in the polynomial basis `1, x, ..., x^(m-1)`
//! of `GF(2)[x] / (modulus)`, packed into a `u32` with bit `i` holding the
//! coefficient of `x^i`. The subfield GF(2^k) is the fixed field of `x -> x^(2^k)`
//! and is generated by `beta = alpha^(2^k+1)`.

use std::fmt;
use std::ops::{Add, AddAssign, BitXor};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported subfield degree (m = 32).
pub const MAX_K: u32 = 16;

/// Log/antilog tables are built only up to this extension degree.
pub const TABLE_MAX_M: u32 = 22;

/// Lexicographically smallest primitive polynomial for each even degree
/// m = 2, 4, ..., 32 (bit i = coefficient of x^i). Indexed by `k - 1`.
pub const DEFAULT_MODULI: [u64; 16] = [
    0x7,
    0x13,
    0x43,
    0x11d,
    0x409,
    0x1053,
    0x402b,
    0x1002d,
    0x40027,
    0x100009,
    0x400003,
    0x100001b,
    0x4000047,
    0x10000009,
    0x40000053,
    0x1000000af,
];

/// A field element as an m-bit coefficient vector.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Lowercase hex of the bit vector, bit 0 = constant term.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Elem> {
        let digits = s.trim().trim_start_matches("0x");
        u32::from_str_radix(digits, 16)
            .map(Elem)
            .map_err(|e| Error::Config(format!("bad element hex `{s}`: {e}")))
    }
}

// Characteristic 2: addition is XOR.
impl Add for Elem {
    type Output = Elem;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl BitXor for Elem {
    type Output = Elem;

    #[inline]
    fn bitxor(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl AddAssign for Elem {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl FromStr for Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Elem> {
        Elem::from_hex(s)
    }
}

impl Serialize for Elem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Elem, D::Error> {
        let s = String::deserialize(deserializer)?;
        Elem::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Degrees and defining polynomial of the tower.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub k: u32,
    pub m: u32,
    pub modulus: u64,
}

/// Carry-less product of two polynomials of degree < 32.
#[inline]
pub fn clmul(a: u32, b: u32) -> u64 {
    let a = a as u64;
    let mut b = b;
    let mut acc = 0u64;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

/// Reduce a polynomial of degree <= 2m-2 modulo `modulus` (degree m).
#[inline]
pub fn reduce(mut x: u64, modulus: u64, m: u32) -> u32 {
    while x >> m != 0 {
        let top = 63 - x.leading_zeros();
        x ^= modulus << (top - m);
    }
    x as u32
}

fn polymulmod(a: u32, b: u32, modulus: u64, m: u32) -> u32 {
    reduce(clmul(a, b), modulus, m)
}

fn polypowmod(mut base: u32, mut e: u64, modulus: u64, m: u32) -> u32 {
    let mut acc = 1u32;
    while e != 0 {
        if e & 1 == 1 {
            acc = polymulmod(acc, base, modulus, m);
        }
        base = polymulmod(base, base, modulus, m);
        e >>= 1;
    }
    acc
}

/// Distinct prime divisors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Whether `modulus` has degree exactly `m`, constant term 1, and the residue of
/// `x` has multiplicative order `2^m - 1`.
pub fn is_primitive(modulus: u64, m: u32) -> bool {
    if m == 0 || m > 32 || modulus >> m != 1 || modulus & 1 == 0 {
        return false;
    }
    let n = (1u64 << m) - 1;
    let x = reduce(2, modulus, m);
    if polypowmod(x, n, modulus, m) != 1 {
        return false;
    }
    prime_factors(n)
        .into_iter()
        .all(|q| polypowmod(x, n / q, modulus, m) != 1)
}

/// A GF(2)-linear map on packed bit vectors, evaluated bytewise.
#[derive(Clone, Debug)]
pub struct LinearMap {
    bytes: Vec<[u32; 256]>,
}

impl LinearMap {
    /// `columns[i]` is the image of the unit vector `e_i`.
    pub fn from_columns(columns: &[u32]) -> Self {
        let nbytes = columns.len().div_ceil(8).max(1);
        let mut bytes = vec![[0u32; 256]; nbytes];
        for (b, table) in bytes.iter_mut().enumerate() {
            for v in 1..256usize {
                let low = v & (v - 1);
                let bit = (v ^ low).trailing_zeros() as usize + 8 * b;
                let col = columns.get(bit).copied().unwrap_or(0);
                table[v] = table[low] ^ col;
            }
        }
        LinearMap { bytes }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        let mut acc = 0;
        for (b, table) in self.bytes.iter().enumerate() {
            acc ^= table[((x >> (8 * b)) & 0xff) as usize];
        }
        acc
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable arithmetic context for GF(2^m) with its subfield GF(2^k).
#[derive(Clone, Debug)]
pub struct FieldCtx {
    spec: FieldSpec,
    order: u64,
    sub_order: u64,
    alpha: Elem,
    beta: Elem,
    tables: Option<LogTables>,
    trace_mask: u32,
    trace_k_mask: u32,
    frob: Vec<LinearMap>,
    gram: LinearMap,
    r: Option<Elem>,
}

/// Result of the subfield queries on one element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubfieldInfo {
    pub is_subfield: bool,
    pub trace_k: Option<u8>,
    pub trace_k_m: Elem,
}

impl FieldCtx {
    /// Build the tower for subfield degree `k` (m = 2k). When `modulus` is
    /// `None` the built-in default for degree m is used. Primitivity is always
    /// verified.
    pub fn new(k: u32, modulus: Option<u64>) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::UnsupportedDegree(k));
        }
        let m = 2 * k;
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[(k - 1) as usize]);
        if !is_primitive(modulus, m) {
            return Err(Error::NonPrimitiveModulus { modulus, m });
        }
        let order = (1u64 << m) - 1;
        let sub_order = (1u64 << k) - 1;
        let alpha = Elem(reduce(2, modulus, m));

        let tables = (m <= TABLE_MAX_M).then(|| {
            let n = order as usize;
            let mut exp = vec![0u32; n];
            let mut log = vec![0u32; 1usize << m];
            let mut x = 1u32;
            for (t, slot) in exp.iter_mut().enumerate() {
                *slot = x;
                log[x as usize] = t as u32;
                x = polymulmod(x, alpha.0, modulus, m);
            }
            LogTables { exp, log }
        });

        let mut ctx = FieldCtx {
            spec: FieldSpec { k, m, modulus },
            order,
            sub_order,
            alpha,
            beta: Elem::ONE,
            tables,
            trace_mask: 0,
            trace_k_mask: 0,
            frob: Vec::new(),
            gram: LinearMap::from_columns(&[]),
            r: None,
        };

        // x -> x^(2^j) for j = 0..m, column i is (alpha^i)^(2^j).
        let basis: Vec<Elem> = (0..m).map(|i| Elem(1 << i)).collect();
        let mut images: Vec<Elem> = basis.clone();
        let mut frob = Vec::with_capacity(m as usize);
        for _ in 0..m {
            frob.push(LinearMap::from_columns(
                &images.iter().map(|e| e.0).collect::<Vec<_>>(),
            ));
            images = images.iter().map(|&e| ctx.mul(e, e)).collect();
        }
        ctx.frob = frob;

        ctx.trace_mask = basis
            .iter()
            .enumerate()
            .fold(0, |mask, (i, &b)| mask | ((ctx.trace_m_conjugates(b) as u32) << i));

        ctx.beta = ctx.pow(alpha, (1u64 << k) + 1);

        // Tr_k(x) = Tr_m(gamma * x) on the subfield whenever gamma + gamma^(2^k) = 1.
        let mut gamma = Elem::ONE;
        while ctx.trace_k_m(gamma) != Elem::ONE {
            gamma = ctx.mul(gamma, alpha);
        }
        ctx.trace_k_mask = basis.iter().enumerate().fold(0, |mask, (i, &b)| {
            mask | ((ctx.trace_m(ctx.mul(gamma, b)) as u32) << i)
        });

        // Gram matrix G[i][j] = Tr_m(alpha^i alpha^j): <G a, x> = Tr_m(a x).
        let gram_cols: Vec<u32> = basis
            .iter()
            .map(|&bj| {
                basis.iter().enumerate().fold(0u32, |col, (i, &bi)| {
                    col | ((ctx.trace_m(ctx.mul(bi, bj)) as u32) << i)
                })
            })
            .collect();
        ctx.gram = LinearMap::from_columns(&gram_cols);

        if k % 2 == 1 {
            ctx.r = Some(ctx.pick_noncube_r()?);
        }
        Ok(ctx)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.spec.k
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.spec.m
    }

    /// 2^m - 1.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    /// 2^k - 1.
    #[inline]
    pub fn sub_order(&self) -> u64 {
        self.sub_order
    }

    #[inline]
    pub fn size(&self) -> usize {
        1usize << self.spec.m
    }

    #[inline]
    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    #[inline]
    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// The distinguished noncube `alpha^(2^k-1)`; present iff k is odd.
    #[inline]
    pub fn r(&self) -> Option<Elem> {
        self.r
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Per-basis traces: bit i is Tr_m(x^i).
    pub fn trace_vector(&self) -> u32 {
        self.trace_mask
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    return Elem::ZERO;
                }
                let mut s = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
                if s >= self.order {
                    s -= self.order;
                }
                Elem(t.exp[s as usize])
            }
            None => self.mul_clmul(a, b),
        }
    }

    /// Multiplication by carry-less product and reduction, never via tables.
    #[inline]
    pub fn mul_clmul(&self, a: Elem, b: Elem) -> Elem {
        Elem(polymulmod(a.0, b.0, self.spec.modulus, self.spec.m))
    }

    /// Table multiplication; `None` when the field has no tables.
    pub fn mul_table(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.tables.as_ref().map(|_| self.mul(a, b))
    }

    /// `x^e` with the convention `0^0 = 1`.
    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let l = t.log[x.0 as usize] as u128 * (e % self.order) as u128;
                Elem(t.exp[(l % self.order as u128) as usize])
            }
            None => Elem(polypowmod(x.0, e, self.spec.modulus, self.spec.m)),
        }
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.order - 1))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete logarithm base alpha of a nonzero element.
    pub fn log(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[x.0 as usize] as u64);
        }
        let mut y = Elem::ONE;
        for t in 0..self.order {
            if y == x {
                return Ok(t);
            }
            y = self.mul_alpha(y);
        }
        unreachable!("alpha is primitive")
    }

    /// `alpha^t`.
    #[inline]
    pub fn exp(&self, t: u64) -> Elem {
        match &self.tables {
            Some(tab) => Elem(tab.exp[(t % self.order) as usize]),
            None => self.pow(self.alpha, t),
        }
    }

    /// Multiply by alpha = x: shift and conditionally reduce.
    #[inline]
    pub fn mul_alpha(&self, a: Elem) -> Elem {
        let s = (a.0 as u64) << 1;
        if s >> self.spec.m != 0 {
            Elem((s ^ self.spec.modulus) as u32)
        } else {
            Elem(s as u32)
        }
    }

    /// `x^(2^j)`, with j taken mod m.
    #[inline]
    pub fn frobenius(&self, x: Elem, j: u32) -> Elem {
        Elem(self.frob[(j % self.spec.m) as usize].apply(x.0))
    }

    /// Absolute trace as the parity of `x` masked with the per-basis traces.
    #[inline]
    pub fn trace_m(&self, x: Elem) -> u8 {
        ((x.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Absolute trace as the sum of the m conjugates `x^(2^i)`.
    pub fn trace_m_conjugates(&self, x: Elem) -> u8 {
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.spec.m {
            acc += y;
            y = self.mul(y, y);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    #[inline]
    pub fn is_subfield(&self, x: Elem) -> bool {
        self.frobenius(x, self.spec.k) == x
    }

    /// Tr_k on GF(2^k).
    pub fn trace_k(&self, x: Elem) -> Result<u8> {
        if !self.is_subfield(x) {
            return Err(Error::NotInSubfield(x.0));
        }
        Ok(self.trace_k_unchecked(x))
    }

    /// Tr_k without the membership check; meaningless for non-subfield input.
    #[inline]
    pub fn trace_k_unchecked(&self, x: Elem) -> u8 {
        ((x.0 & self.trace_k_mask).count_ones() & 1) as u8
    }

    /// Tr_k as the sum of the k conjugates.
    pub fn trace_k_conjugates(&self, x: Elem) -> Result<u8> {
        if !self.is_subfield(x) {
            return Err(Error::NotInSubfield(x.0));
        }
        let mut acc = Elem::ZERO;
        for i in 0..self.spec.k {
            acc += self.frobenius(x, i);
        }
        Ok(acc.0 as u8)
    }

    /// Relative trace `x + x^(2^k)` onto GF(2^k).
    #[inline]
    pub fn trace_k_m(&self, x: Elem) -> Elem {
        x + self.frobenius(x, self.spec.k)
    }

    pub fn subfield_ops(&self, x: Elem) -> SubfieldInfo {
        let is_subfield = self.is_subfield(x);
        SubfieldInfo {
            is_subfield,
            trace_k: is_subfield.then(|| self.trace_k_unchecked(x)),
            trace_k_m: self.trace_k_m(x),
        }
    }

    /// Trace of an integer constant `c` read as `(c mod 2) * 1`.
    #[inline]
    pub fn trace_k_int(&self, c: u64) -> u8 {
        ((c & 1) as u32 * (self.spec.k & 1)) as u8
    }

    /// Integer constant `c` as the field element `(c mod 2) * 1`.
    #[inline]
    pub fn int(&self, c: u64) -> Elem {
        Elem((c & 1) as u32)
    }

    pub fn is_cube(&self, x: Elem) -> bool {
        if x.is_zero() {
            return true;
        }
        if let Some(t) = &self.tables {
            return t.log[x.0 as usize] % 3 == 0;
        }
        self.pow(x, self.order / 3) == Elem::ONE
    }

    /// `r = alpha^(2^k-1)`, checked to satisfy `r^(2^k+1) = 1` and to be a noncube.
    pub fn pick_noncube_r(&self) -> Result<Elem> {
        if self.spec.k % 2 == 0 {
            return Err(Error::NoncubeUnavailable(format!(
                "k = {} is even, so every element of order dividing 2^k+1 is a cube",
                self.spec.k
            )));
        }
        let r = self.pow(self.alpha, self.sub_order);
        if self.pow(r, (1u64 << self.spec.k) + 1) != Elem::ONE {
            return Err(Error::NoncubeUnavailable("r^(2^k+1) != 1".into()));
        }
        if self.is_cube(r) {
            return Err(Error::NoncubeUnavailable("alpha^(2^k-1) is a cube".into()));
        }
        Ok(r)
    }

    /// The vector `u(a)` with `<u(a), x> = Tr_m(a x)` for every x.
    #[inline]
    pub fn gram_index(&self, a: Elem) -> u32 {
        self.gram.apply(a.0)
    }

    /// Nonzero subfield elements in the order `beta^0, beta^1, ..., beta^(2^k-2)`.
    pub fn subfield_nonzero(&self) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.sub_order as usize);
        let mut x = Elem::ONE;
        for _ in 0..self.sub_order {
            out.push(x);
            x = self.mul(x, self.beta);
        }
        out
    }

    /// `0` followed by [`Self::subfield_nonzero`].
    pub fn subfield_elements(&self) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO];
        out.extend(self.subfield_nonzero());
        out
    }

    /// Every element of GF(2^m), in bit-vector order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size() as u64).map(|x| Elem(x as u32))
    }

    /// Validate that `x` is a canonical element of this field.
    pub fn check(&self, x: Elem) -> Result<Elem> {
        if (x.0 as u64) >> self.spec.m != 0 {
            return Err(Error::PreconditionViolated(format!(
                "element {:#x} has more than m = {} bits",
                x.0, self.spec.m
            )));
        }
        Ok(x)
    }
}

/// Operation selector for [`arith`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// Dispatching front end over the field operations. `Inv` and `Pow` use only
/// the first operand; `Add` and `Mul` fold over all of them.
pub fn arith(ctx: &FieldCtx, op: ArithOp, operands: &[Elem]) -> Result<Elem> {
    for &x in operands {
        ctx.check(x)?;
    }
    let first = *operands
        .first()
        .ok_or_else(|| Error::PreconditionViolated("no operands".into()))?;
    match op {
        ArithOp::Add => Ok(operands.iter().fold(Elem::ZERO, |acc, &x| acc + x)),
        ArithOp::Mul => Ok(operands.iter().fold(Elem::ONE, |acc, &x| ctx.mul(acc, x))),
        ArithOp::Inv => ctx.inv(first),
        ArithOp::Pow(e) => Ok(ctx.pow(first, e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    /// Multiplicative order of x modulo `modulus` by walking all powers.
    fn order_of_x(modulus: u64, m: u32) -> u64 {
        let x = reduce(2, modulus, m);
        let mut y = x;
        let mut t = 1u64;
        while y != 1 {
            y = polymulmod(y, x, modulus, m);
            t += 1;
            if t > (1u64 << m) {
                return 0;
            }
        }
        t
    }

    #[test]
    fn default_moduli_are_smallest_primitive() {
        for k in 1..=8u32 {
            let m = 2 * k;
            let expect = DEFAULT_MODULI[(k - 1) as usize];
            let first = ((1u64 << m) | 1..)
                .step_by(2)
                .find(|&p| order_of_x(p, m) == (1u64 << m) - 1)
                .unwrap();
            assert_eq!(first, expect, "m = {m}");
        }
        for (i, &p) in DEFAULT_MODULI.iter().enumerate() {
            assert!(is_primitive(p, 2 * (i as u32 + 1)));
        }
    }

    #[test]
    fn build_k3_default() {
        let ctx = FieldCtx::new(3, None).unwrap();
        assert!(ctx.has_tables());
        assert_eq!(ctx.order(), 63);
        assert_eq!(order_of_x(ctx.spec().modulus, 6), 63);
        let mut y = ctx.alpha();
        let mut ord = 1;
        while y != Elem::ONE {
            y = ctx.mul(y, ctx.alpha());
            ord += 1;
        }
        assert_eq!(ord, 63);
    }

    #[test]
    fn explicit_moduli() {
        assert_eq!(order_of_x(0b1000011, 6), 63);
        assert!(FieldCtx::new(3, Some(0b1000011)).is_ok());
        // x^6 + x^3 + 1: x has order 9.
        assert_eq!(order_of_x(0b1001001, 6), 9);
        assert_eq!(
            FieldCtx::new(3, Some(0b1001001)).unwrap_err(),
            Error::NonPrimitiveModulus { modulus: 0b1001001, m: 6 }
        );
        assert!(matches!(
            FieldCtx::new(3, Some(0b100011)),
            Err(Error::NonPrimitiveModulus { .. })
        ));
    }

    #[test]
    fn unsupported_degrees() {
        assert_eq!(FieldCtx::new(0, None).unwrap_err(), Error::UnsupportedDegree(0));
        assert_eq!(FieldCtx::new(17, None).unwrap_err(), Error::UnsupportedDegree(17));
    }

    #[test]
    fn arith_examples() {
        let ctx = FieldCtx::new(3, None).unwrap();
        let a = ctx.alpha();
        assert_eq!(arith(&ctx, ArithOp::Add, &[a, a]).unwrap(), Elem::ZERO);
        let ia = arith(&ctx, ArithOp::Inv, &[a]).unwrap();
        assert_eq!(arith(&ctx, ArithOp::Mul, &[a, ia]).unwrap(), Elem::ONE);
        assert_eq!(arith(&ctx, ArithOp::Pow(63), &[a]).unwrap(), Elem::ONE);
        assert_eq!(ctx.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert!(arith(&ctx, ArithOp::Add, &[Elem(64)]).is_err());
    }

    #[test]
    fn frobenius_is_additive_k3() {
        let ctx = FieldCtx::new(3, None).unwrap();
        for x in ctx.elements() {
            for y in ctx.elements() {
                let s = x + y;
                assert_eq!(ctx.mul(s, s), ctx.mul(x, x) + ctx.mul(y, y));
            }
            assert_eq!(ctx.frobenius(x, 1), ctx.mul(x, x));
            assert_eq!(ctx.frobenius(x, 4), ctx.pow(x, 16));
        }
    }

    #[test]
    fn table_and_clmul_agree() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for k in [3u32, 5, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            let mask = (1u32 << ctx.m()) - 1;
            for _ in 0..10_000 {
                let a = Elem(rng.random::<u32>() & mask);
                let b = Elem(rng.random::<u32>() & mask);
                assert_eq!(ctx.mul_table(a, b).unwrap(), ctx.mul_clmul(a, b));
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let ctx = FieldCtx::new(12, None).unwrap();
        assert!(!ctx.has_tables());
        assert_eq!(ctx.pow(ctx.alpha(), ctx.order()), Elem::ONE);
        let x = ctx.exp(123_456);
        assert_eq!(ctx.mul(x, ctx.inv(x).unwrap()), Elem::ONE);
        assert_eq!(ctx.pow(ctx.beta(), ctx.sub_order()), Elem::ONE);
        assert!(ctx.is_subfield(ctx.beta()));
        assert_eq!(ctx.trace_m(x), ctx.trace_m_conjugates(x));
    }

    #[test]
    fn traces() {
        let ctx = FieldCtx::new(3, None).unwrap();
        assert_eq!(ctx.trace_m(Elem::ZERO), 0);
        assert_eq!(ctx.trace_m(Elem::ONE), 0);
        let ones = ctx.elements().filter(|&x| ctx.trace_m(x) == 1).count();
        assert_eq!(ones, 32);
        for x in ctx.elements() {
            assert_eq!(ctx.trace_m(x), ctx.trace_m_conjugates(x));
            let t = ctx.trace_k_m(x);
            assert!(ctx.is_subfield(t));
            assert_eq!(ctx.trace_k(t).unwrap(), ctx.trace_m(x));
            for y in ctx.elements().step_by(5) {
                assert_eq!(ctx.trace_m(x + y), ctx.trace_m(x) ^ ctx.trace_m(y));
            }
        }
    }

    #[test]
    fn subfield_membership_and_trace_k() {
        for k in [3u32, 4, 5] {
            let ctx = FieldCtx::new(k, None).unwrap();
            let members = ctx.elements().filter(|&x| ctx.is_subfield(x)).count();
            assert_eq!(members, 1 << k);
            let mut b = Elem::ONE;
            for _ in 0..ctx.sub_order() {
                assert!(ctx.is_subfield(b));
                assert_eq!(ctx.trace_k(b).unwrap(), ctx.trace_k_conjugates(b).unwrap());
                b = ctx.mul(b, ctx.beta());
            }
            assert_eq!(b, Elem::ONE);
            let outside = ctx.elements().find(|&x| !ctx.is_subfield(x)).unwrap();
            assert_eq!(ctx.trace_k(outside), Err(Error::NotInSubfield(outside.0)));
            let info = ctx.subfield_ops(outside);
            assert!(!info.is_subfield && info.trace_k.is_none());
        }
    }

    #[test]
    fn cubes_and_noncube_r() {
        for k in [3u32, 5, 7] {
            let ctx = FieldCtx::new(k, None).unwrap();
            assert!(ctx.is_cube(Elem::ONE));
            let r = ctx.r().unwrap();
            assert_eq!(r, ctx.pow(ctx.alpha(), ctx.sub_order()));
            assert_eq!(ctx.pow(r, (1 << k) + 1), Elem::ONE);
            assert!(!ctx.is_cube(r));
            // The three cube classes partition the multiplicative group.
            let mut classes = [0u64; 3];
            for t in 0..ctx.order() {
                let x = ctx.exp(t);
                assert_eq!(ctx.is_cube(x), ctx.pow(x, ctx.order() / 3) == Elem::ONE);
                classes[(t % 3) as usize] += 1;
            }
            assert!(classes.iter().all(|&c| c == ctx.order() / 3));
            let cubes = (0..ctx.order()).filter(|&t| ctx.is_cube(ctx.exp(t))).count() as u64;
            assert_eq!(cubes, ctx.order() / 3);
        }
        let even = FieldCtx::new(4, None).unwrap();
        assert!(even.r().is_none());
        assert!(matches!(even.pick_noncube_r(), Err(Error::NoncubeUnavailable(_))));
    }

    #[test]
    fn gram_index_matches_trace_form() {
        let ctx = FieldCtx::new(3, None).unwrap();
        for a in ctx.elements() {
            let u = ctx.gram_index(a);
            for x in ctx.elements() {
                let dot = ((u & x.0).count_ones() & 1) as u8;
                assert_eq!(dot, ctx.trace_m(ctx.mul(a, x)));
            }
        }
    }

    #[test]
    fn hex_round_trip() {
        assert_eq!(Elem(0x2b).to_hex(), "2b");
        assert_eq!(Elem::from_hex("0x2B").unwrap(), Elem(0x2b));
        assert!(Elem::from_hex("zz").is_err());
        let json = serde_json::to_string(&Elem(10)).unwrap();
        assert_eq!(json, "\"a\"");
    }
}
