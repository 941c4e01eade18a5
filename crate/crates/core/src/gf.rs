//! Finite fields F_q, q = p^m with p an odd prime.
//!
//! Elements are stored as a compact index [`Gf`]: the polynomial-basis
//! coefficient vector `(c_0, .., c_{m-1})` read as a base-p number with `c_0`
//! least significant. Index order is therefore lexicographic on
//! `(c_{m-1}, .., c_0)`, which is the canonical total order used everywhere
//! (root sorting, factor ordering, matrix search).
//!
//! Multiplication goes through exp/log tables built once per field. Addition
//! is a residue add for prime fields and a digit-wise add (or a cached table
//! for small q) for extension fields.
//!
//! Text form follows the usual table notation: elements of the prime subfield
//! print as decimal residues and everything else as `w^k`, where `w` is the
//! field's primitive element.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Extension moduli used when none is supplied, ascending coefficients.
/// Each is primitive, so the residue class of `x` is the printed `w`.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

// fields with q below this cache a full addition table
const ADD_TABLE_LIMIT: u32 = 1024;

/// A field element as a bare index; meaningful only together with its [`Field`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// ascending, monic; `[0, 1]` for prime fields
    modulus: Vec<u32>,
    primitive: Gf,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field of odd characteristic. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "F_{}", self.0.q)
        } else {
            write!(f, "F_{}[{:?}]", self.0.q, self.0.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// F_{p^m}. `modulus` lists the coefficients of a monic degree-m polynomial
    /// in descending order (`[1, 2, 2]` is x^2 + 2x + 2). When omitted the
    /// built-in table is used, falling back to the lexicographically first
    /// primitive polynomial. Ignored for m = 1.
    pub fn new(p: u64, m: u32, modulus: Option<&[i64]>) -> Result<Field> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).pow(m);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let (p, q) = (p as u32, q as u32);

        if m == 1 {
            let mut inner = Inner {
                p,
                m,
                q,
                modulus: vec![0, 1],
                primitive: Gf(0),
                exp: Vec::new(),
                log: Vec::new(),
                add: None,
            };
            let g = (2..q)
                .map(Gf)
                .find(|&g| is_generator(&inner, g))
                .expect("prime fields have a primitive root");
            inner.primitive = g;
            build_tables(&mut inner);
            return Ok(Field(Arc::new(inner)));
        }

        let modulus: Vec<u32> = match modulus {
            Some(desc) => {
                if desc.len() != m as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected degree {m}, got {} coefficients",
                        desc.len()
                    )));
                }
                let asc: Vec<u32> =
                    desc.iter().rev().map(|&c| c.rem_euclid(p as i64) as u32).collect();
                if asc[m as usize] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if !fp::is_irreducible(&asc, p) {
                    return Err(Error::BadModulus(format!("{desc:?} is reducible over F_{p}")));
                }
                asc
            }
            None => match BUILTIN_MODULI.iter().find(|(bp, bm, _)| *bp == p && *bm == m) {
                Some((_, _, asc)) => asc.to_vec(),
                None => fp::first_primitive(p, m),
            },
        };

        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            primitive: Gf(0),
            exp: Vec::new(),
            log: Vec::new(),
            add: None,
        };
        // prefer the class of x so that `w` names the modulus root
        let x = Gf(p);
        let g = std::iter::once(x)
            .chain((2..q).map(Gf))
            .find(|&g| is_generator(&inner, g))
            .ok_or_else(|| Error::BadModulus("no primitive element".into()))?;
        inner.primitive = g;
        build_tables(&mut inner);
        Ok(Field(Arc::new(inner)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients in descending order; empty for prime fields.
    pub fn modulus(&self) -> Vec<u32> {
        if self.0.m == 1 {
            Vec::new()
        } else {
            self.0.modulus.iter().rev().copied().collect()
        }
    }

    pub fn primitive_element(&self) -> Gf {
        self.0.primitive
    }

    pub fn zero(&self) -> Gf {
        Gf::ZERO
    }

    pub fn one(&self) -> Gf {
        Gf::ONE
    }

    /// Image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_index(&self, idx: u32) -> Option<Gf> {
        (idx < self.0.q).then_some(Gf(idx))
    }

    /// Polynomial-basis coefficients `(c_0, .., c_{m-1})`.
    pub fn digits(&self, a: Gf) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// Inverse of [`Field::digits`]; extra coefficients are an error in spirit and ignored.
    pub fn from_digits(&self, digits: &[u32]) -> Gf {
        let p = self.0.p;
        let mut idx = 0u32;
        for &d in digits.iter().take(self.0.m as usize).rev() {
            idx = idx * p + d % p;
        }
        Gf(idx)
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.0.q).map(Gf)
    }

    pub fn element(&self, a: Gf) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        let inner = &*self.0;
        if inner.m == 1 {
            let s = a.0 + b.0;
            return Gf(if s >= inner.p { s - inner.p } else { s });
        }
        if let Some(t) = &inner.add {
            return Gf(t[(a.0 * inner.q + b.0) as usize]);
        }
        digit_add(inner, a.0, b.0)
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        let inner = &*self.0;
        if inner.m == 1 {
            return Gf(if a.0 == 0 { 0 } else { inner.p - a.0 });
        }
        let p = inner.p;
        let (mut v, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..inner.m {
            let d = v % p;
            v /= p;
            out += ((p - d) % p) * place;
            place *= p;
        }
        Gf(out)
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let inner = &*self.0;
        Gf(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse from the log tables.
    pub fn inv(&self, a: Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let inner = &*self.0;
        let l = inner.log[a.0 as usize];
        Some(Gf(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// modulus, independent of the log tables.
    pub fn inv_euclid(&self, a: Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let inner = &*self.0;
        let d = fp::inverse_mod(&self.digits(a), &inner.modulus, inner.p)?;
        Some(self.from_digits(&d))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^k` for non-negative k; `0^0 = 1`.
    pub fn pow_u(&self, a: Gf, k: u64) -> Gf {
        if k == 0 {
            return Gf::ONE;
        }
        if a.0 == 0 {
            return Gf::ZERO;
        }
        let inner = &*self.0;
        let l = (inner.log[a.0 as usize] as u64 * (k % (inner.q as u64 - 1))) % (inner.q as u64 - 1);
        Gf(inner.exp[l as usize])
    }

    /// `a^k`; negative exponents invert first.
    pub fn pow(&self, a: Gf, k: i64) -> Result<Gf> {
        if k >= 0 {
            Ok(self.pow_u(a, k as u64))
        } else {
            let inv = self.inv(a).ok_or(Error::NegativePowerOfZero)?;
            Ok(self.pow_u(inv, k.unsigned_abs()))
        }
    }

    /// Discrete log to the base of the primitive element.
    pub fn log(&self, a: Gf) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Gf) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.0.q as u64 - 1;
        Some(n / gcd(n, l))
    }

    /// Euler's criterion: `a^((q-1)/2) = 1`.
    pub fn is_square(&self, a: Gf) -> Result<bool> {
        if a.0 == 0 {
            return Err(Error::ZeroInput("is_square"));
        }
        Ok(self.pow_u(a, (self.0.q as u64 - 1) / 2) == Gf::ONE)
    }

    /// The e-th roots of unity in canonical (index) order.
    pub fn nth_roots_of_unity(&self, e: usize) -> Result<Vec<Gf>> {
        let n = self.0.q as u64 - 1;
        if e == 0 || !n.is_multiple_of(e as u64) {
            return Err(Error::NoRootsOfUnity { e, q_minus_one: n });
        }
        let step = n / e as u64;
        let mut roots: Vec<Gf> =
            (0..e as u64).map(|k| Gf(self.0.exp[(k * step) as usize])).collect();
        roots.sort();
        Ok(roots)
    }

    pub fn in_prime_subfield(&self, a: Gf) -> bool {
        a.0 < self.0.p
    }

    /// The map a -> a^(q/p), inverse of Frobenius; used for p-th roots.
    pub fn pth_root(&self, a: Gf) -> Gf {
        self.pow_u(a, self.0.q as u64 / self.0.p as u64)
    }

    /// Decimal for prime-subfield elements, `w^k` otherwise.
    pub fn format(&self, a: Gf) -> String {
        if self.in_prime_subfield(a) {
            return a.0.to_string();
        }
        match self.log(a) {
            Some(1) => "w".to_string(),
            Some(k) => format!("w^{k}"),
            None => "0".to_string(),
        }
    }

    /// Parses an integer (reduced mod p), `w` or `w^k` (k may be negative).
    pub fn parse(&self, s: &str) -> Result<Gf> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('w') {
            let k: i64 = match rest.trim() {
                "" => 1,
                r => r
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad element {s:?}")))?
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?,
            };
            return self.pow(self.primitive_element(), k);
        }
        s.parse::<i64>()
            .map(|v| self.from_int(v))
            .map_err(|_| Error::Parse(format!("bad element {s:?}")))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn digit_add(inner: &Inner, a: u32, b: u32) -> Gf {
    let p = inner.p;
    let (mut x, mut y, mut out, mut place) = (a, b, 0u32, 1u32);
    for _ in 0..inner.m {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    Gf(out)
}

/// Multiplication before the tables exist.
fn slow_mul(inner: &Inner, a: u32, b: u32) -> u32 {
    let p = inner.p as u64;
    if inner.m == 1 {
        return ((a as u64 * b as u64) % p) as u32;
    }
    let digits = |mut v: u32| -> Vec<u64> {
        (0..inner.m)
            .map(|_| {
                let d = v % inner.p;
                v /= inner.p;
                d as u64
            })
            .collect()
    };
    let modulus: Vec<u64> = inner.modulus.iter().map(|&c| c as u64).collect();
    let prod = fp::mul_mod(&digits(a), &digits(b), &modulus, p);
    let mut idx = 0u64;
    for &d in prod.iter().rev() {
        idx = idx * p + d;
    }
    idx as u32
}

fn is_generator(inner: &Inner, g: Gf) -> bool {
    if g.0 == 0 {
        return false;
    }
    let n = inner.q as u64 - 1;
    let pow = |mut e: u64| {
        let (mut base, mut acc) = (g.0, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(inner, acc, base);
            }
            base = slow_mul(inner, base, base);
            e >>= 1;
        }
        acc
    };
    if pow(n) != 1 {
        return false;
    }
    prime_factors(n).into_iter().all(|r| pow(n / r) != 1)
}

fn build_tables(inner: &mut Inner) {
    let n = (inner.q - 1) as usize;
    let mut exp = vec![0u32; 2 * n];
    let mut log = vec![u32::MAX; inner.q as usize];
    let mut cur = 1u32;
    for (k, slot) in exp.iter_mut().take(n).enumerate() {
        *slot = cur;
        log[cur as usize] = k as u32;
        cur = slow_mul(inner, cur, inner.primitive.0);
    }
    for k in n..2 * n {
        exp[k] = exp[k - n];
    }
    inner.exp = exp;
    inner.log = log;
    if inner.m > 1 && inner.q <= ADD_TABLE_LIMIT {
        let q = inner.q;
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = digit_add(inner, a, b).0;
            }
        }
        inner.add = Some(t);
    }
}

/// Dense F_p polynomial helpers (ascending `Vec<u64>`) used to vet moduli
/// before any field tables exist.
mod fp {
    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut r = 1;
        let (mut b, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let f = trim(f.to_vec());
        let lead_inv = inv(*f.last().unwrap(), p);
        while r.len() >= f.len() && !r.is_empty() {
            let c = r.last().unwrap() * lead_inv % p;
            let shift = r.len() - f.len();
            for (i, &fc) in f.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * fc % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub(super) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        let mut r = rem(&out, f, p);
        r.resize(f.len() - 1, 0);
        r
    }

    fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &b, f, p);
            }
            b = mul_mod(&b, &b, f, p);
            e >>= 1;
        }
        acc
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn widen(a: &[u32]) -> Vec<u64> {
        a.iter().map(|&c| c as u64).collect()
    }

    /// Rabin's test for a monic f (ascending) of degree m.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let (f, p) = (widen(f), p as u64);
        let m = f.len() as u64 - 1;
        let x = vec![0u64, 1];
        // frob[k] = x^(p^k) mod f
        let mut frob = vec![rem(&x, &f, p)];
        for _ in 0..m {
            let next = pow_mod(frob.last().unwrap(), p, &f, p);
            frob.push(next);
        }
        if !sub(&frob[m as usize], &x, p).is_empty() {
            return false;
        }
        super::prime_factors(m).into_iter().all(|r| {
            let g = gcd(&sub(&frob[(m / r) as usize], &x, p), &f, p);
            g.len() == 1
        })
    }

    /// Lexicographically first monic primitive polynomial of degree m.
    pub(super) fn first_primitive(p: u32, m: u32) -> Vec<u32> {
        let q = (p as u64).pow(m);
        let n = q - 1;
        let factors = super::prime_factors(n);
        for idx in 0..q {
            let mut f: Vec<u64> = (0..m).map(|i| (idx / (p as u64).pow(i)) % p as u64).collect();
            if f[0] == 0 {
                continue;
            }
            f.push(1);
            let f32: Vec<u32> = f.iter().map(|&c| c as u32).collect();
            if !is_irreducible(&f32, p) {
                continue;
            }
            let x = vec![0u64, 1];
            let one = |v: &Vec<u64>| trim(v.clone()) == vec![1];
            if factors.iter().all(|&r| !one(&pow_mod(&x, n / r, &f, p as u64))) {
                return f32;
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    /// Inverse of a modulo f by the extended Euclidean algorithm.
    pub(super) fn inverse_mod(a: &[u32], f: &[u32], p: u32) -> Option<Vec<u32>> {
        let (p, f) = (p as u64, widen(f));
        let (mut r0, mut r1) = (f.clone(), trim(widen(a)));
        let (mut t0, mut t1) = (Vec::<u64>::new(), vec![1u64]);
        while !r1.is_empty() {
            // one long division step: r0 = quo * r1 + rem
            let mut quo = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
            let mut rr = r0.clone();
            let lead_inv = inv(*r1.last().unwrap(), p);
            while rr.len() >= r1.len() && !rr.is_empty() {
                let c = rr.last().unwrap() * lead_inv % p;
                let shift = rr.len() - r1.len();
                quo[shift] = c;
                for (i, &x) in r1.iter().enumerate() {
                    rr[shift + i] = (rr[shift + i] + p - c * x % p) % p;
                }
                rr = trim(rr);
            }
            let mut qt = vec![0u64; quo.len() + t1.len()];
            for (i, &x) in quo.iter().enumerate() {
                for (j, &y) in t1.iter().enumerate() {
                    qt[i + j] = (qt[i + j] + x * y) % p;
                }
            }
            let t2 = sub(&t0, &qt, p);
            r0 = std::mem::replace(&mut r1, rr);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = inv(r0[0], p);
        let out = rem(&t0, &f, p).iter().map(|&x| (x * c % p) as u32).collect();
        Some(out)
    }
}

/// Arithmetic operation selector for [`FieldElement::arith`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A field element bound to its field. Mixing fields is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Gf,
}

impl FieldElement {
    pub fn new(field: &Field, value: Gf) -> Self {
        FieldElement { field: field.clone(), value }
    }

    pub fn from_int(field: &Field, v: i64) -> Self {
        FieldElement { field: field.clone(), value: field.from_int(v) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Gf {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(FieldElement { field: f.clone(), value })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let value = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement { field: self.field.clone(), value })
    }

    pub fn pow(&self, k: i64) -> Result<FieldElement> {
        let value = self.field.pow(self.value, k)?;
        Ok(FieldElement { field: self.field.clone(), value })
    }

    pub fn is_square(&self) -> Result<bool> {
        self.field.is_square(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.arith(rhs, $op).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), value: self.field.neg(self.value) }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
