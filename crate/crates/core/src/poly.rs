//! Dense univariate polynomials over a [`Field`] and their factorization.
//!
//! Coefficients are stored ascending with no trailing zeros. The text form is
//! the descending coefficient tuple used in code tables: `(1,3,0,2,4)` is
//! x^4 + 3x^3 + 2x + 4.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};

/// Seed for the randomized equal-degree splitting when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Gf>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Gf::ONE)
    }

    pub fn constant(field: &Field, c: Gf) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(field: &Field, c: Gf, deg: usize) -> Poly {
        let mut coeffs = vec![Gf::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Gf::ONE, 1)
    }

    /// x^n - 1
    pub fn xn_minus_1(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![Gf::ZERO; n + 1];
        coeffs[0] = field.neg(Gf::ONE);
        coeffs[n] = field.add(coeffs[n], Gf::ONE);
        Poly::from_coeffs(field, coeffs)
    }

    /// From ascending coefficients; trailing zeros are dropped.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Gf>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// From descending coefficients, leading coefficient first.
    pub fn from_desc(field: &Field, desc: &[Gf]) -> Poly {
        Poly::from_coeffs(field, desc.iter().rev().copied().collect())
    }

    /// Descending integer coefficients, each reduced into the prime subfield.
    pub fn from_ints(field: &Field, desc: &[i64]) -> Poly {
        Poly::from_coeffs(field, desc.iter().rev().map(|&c| field.from_int(c)).collect())
    }

    /// Parses `(1,3,0,2,4)`; parentheses optional, separators `,` or whitespace.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body);
        let desc = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| field.parse(t))
            .collect::<Result<Vec<_>>>()?;
        if desc.is_empty() {
            return Err(Error::Parse(format!("empty polynomial {s:?}")));
        }
        Ok(Poly::from_desc(field, &desc))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    /// Descending coefficients, `[0]` for the zero polynomial.
    pub fn desc(&self) -> Vec<Gf> {
        if self.coeffs.is_empty() {
            return vec![Gf::ZERO];
        }
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Gf::ONE]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Gf {
        self.coeffs.last().copied().unwrap_or(Gf::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Gf::ONE
    }

    fn check(&self, other: &Poly) {
        if self.field != other.field {
            panic!("{}", Error::FieldMismatch);
        }
    }

    pub fn scale(&self, c: Gf) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: Gf) -> Gf {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Gf::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Poly::from_coeffs(f, coeffs)
    }

    /// Euclidean division `self = quo * divisor + rem`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = f.inv(divisor.lead()).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quo = vec![Gf::ZERO; rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            quo[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quo), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, z, h)` with `g` monic and `z*self + h*other = g`.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other);
        let f = &self.field;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quo, rem) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&quo * &s1);
            let t2 = &t0 - &(&quo * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = f.inv(r0.lead()).expect("nonzero gcd");
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// `self^e mod modulus`
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(&self.field), |acc, _| &acc * self)
    }

    /// `x^deg f * f(1/x)`, i.e. the coefficient vector reversed.
    pub fn reciprocal(&self) -> Reciprocal {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let degree_preserved = !self.coeff(0).is_zero() || self.is_zero();
        Reciprocal { poly: Poly::from_coeffs(&self.field, coeffs), degree_preserved }
    }

    /// True iff the monic normalization of the reciprocal equals `self`.
    /// Requires a monic input with nonzero constant term.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(self.reciprocal().poly.monic() == *self)
    }

    /// Canonical order: degree first, then descending coefficient vectors lexicographically.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Conventional expression form, e.g. `x^4 + 3x^3 + 2x + 4`.
    pub fn to_expression(&self) -> String {
        self.expression_in('x')
    }

    pub fn expression_in(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let cs = f.format(c);
                let power = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                match (i, c == Gf::ONE) {
                    (0, _) => cs,
                    (_, true) => power,
                    _ if f.in_prime_subfield(c) => format!("{cs}{power}"),
                    _ => format!("{cs}*{power}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Poly::from_coeffs(f, coeffs)
    }
}

/// Result of [`Poly::reciprocal`]; `degree_preserved` is false when the
/// constant term was zero and the degree dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reciprocal {
    pub poly: Poly,
    pub degree_preserved: bool,
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.desc().iter().map(|&c| self.field.format(c)).collect();
        write!(out, "({})", parts.join(","))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{} over {}", self, self.field)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(f, (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Gf::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

/// `unit * prod factor^multiplicity`, factors monic irreducible and canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub field: Field,
    pub unit: Gf,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(&self.field, self.unit), |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// Multiplicity of `factor` (monic irreducible), 0 if absent.
    pub fn multiplicity(&self, factor: &Poly) -> usize {
        self.factors.iter().find(|(f, _)| f == factor).map_or(0, |(_, m)| *m)
    }

    /// Number of monic divisors: prod (m_i + 1).
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, m)| *m as u128 + 1).product()
    }

    fn sort(&mut self) {
        self.factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit != Gf::ONE || self.factors.is_empty() {
            parts.push(self.field.format(self.unit));
        }
        for (f, m) in &self.factors {
            let base = format!("({})", f.to_expression());
            if *m == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{m}"));
            }
        }
        out.write_str(&parts.join(""))
    }
}

/// Complete factorization with the default seed.
pub fn factor(f: &Poly) -> Result<Factorization> {
    factor_with_seed(f, DEFAULT_SEED)
}

/// Square-free decomposition, distinct-degree splitting, then
/// Cantor-Zassenhaus equal-degree splitting driven by a seeded generator.
/// The output order does not depend on the seed.
pub fn factor_with_seed(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lead();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for (chunk, d) in distinct_degree(&part) {
            for g in equal_degree(&chunk, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    let mut out = Factorization { field: f.field().clone(), unit, factors };
    out.sort();
    Ok(out)
}

/// Factorization of x^n - 1: with n = p^a * n', each irreducible factor of
/// the square-free x^{n'} - 1 appears with multiplicity p^a.
pub fn factor_xn_minus_1(field: &Field, n: usize) -> Factorization {
    factor_xn_minus_1_with_seed(field, n, DEFAULT_SEED)
}

pub fn factor_xn_minus_1_with_seed(field: &Field, n: usize, seed: u64) -> Factorization {
    assert!(n >= 1, "length must be positive");
    let p = field.p() as usize;
    let (mut core, mut mult) = (n, 1usize);
    while core % p == 0 {
        core /= p;
        mult *= p;
    }
    let base = Poly::xn_minus_1(field, core);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (chunk, d) in distinct_degree(&base) {
        for g in equal_degree(&chunk, d, &mut rng) {
            factors.push((g, mult));
        }
    }
    let mut out = Factorization { field: field.clone(), unit: Gf::ONE, factors };
    out.sort();
    out
}

/// Monic square-free parts with their multiplicities.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = field.p() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let part = w.div_exact(&y).expect("gcd divides");
        if !part.is_one() {
            out.push((part, i));
        }
        w = y;
        c = c.div_exact(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Groups the irreducible factors of a monic square-free `f` by degree.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.q() as u64;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(q, &rest).expect("nonzero");
        let g = (&h - &x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Splits a monic square-free product of degree-d irreducibles (odd q).
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    if f.deg() == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.q();
    let half = (q as u64 - 1) / 2;
    loop {
        let a = Poly::from_coeffs(
            field,
            (0..f.deg()).map(|_| Gf(rng.gen_range(0..q))).collect(),
        );
        if a.is_constant() {
            continue;
        }
        // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
        let mut norm = a.clone();
        let mut frob = a.clone();
        for _ in 1..d {
            frob = frob.pow_mod(q as u64, f).expect("nonzero");
            norm = (&norm * &frob).rem(f).expect("nonzero");
        }
        let b = &norm.pow_mod(half, f).expect("nonzero") - &Poly::one(field);
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let other = f.div_exact(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(f: &Field, desc: &[i64]) -> Poly {
        Poly::from_ints(f, desc)
    }

    #[test]
    fn divmod_examples() {
        let f5 = fp(5);
        let (q, r) = poly(&f5, &[1, 0, -1]).divmod(&poly(&f5, &[1, -1])).unwrap();
        assert_eq!((q, r.is_zero()), (poly(&f5, &[1, 1]), true));
        let (q, r) = poly(&f5, &[1, 2, 2, 1]).divmod(&poly(&f5, &[1, 1])).unwrap();
        assert_eq!(q, poly(&f5, &[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = poly(&f5, &[1, 1]).divmod(&poly(&f5, &[1, 0, 0])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, poly(&f5, &[1, 1]));
        assert_eq!(poly(&f5, &[1]).divmod(&Poly::zero(&f5)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn xgcd_examples() {
        let f7 = fp(7);
        let a = poly(&f7, &[1, 6]);
        let b = &poly(&f7, &[1, 3]) * &poly(&f7, &[1, 5]);
        let (g, z, h) = a.xgcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(h, Poly::constant(&f7, Gf(5)));
        assert_eq!(&(&z * &a) + &(&h * &b), g);

        let f5 = fp(5);
        let p = poly(&f5, &[2, 3, 1]);
        let (g, z, h) = p.xgcd(&p).unwrap();
        assert_eq!(g, p.monic());
        assert_eq!(&(&z * &p) + &(&h * &p), g);

        let a = poly(&f7, &[1, 5]);
        let b = a.scale(Gf(3));
        let (g, z, h) = a.xgcd(&b).unwrap();
        assert_eq!(g, a);
        assert_eq!(&(&z * &a) + &(&h * &b), g);

        assert_eq!(Poly::zero(&f7).xgcd(&Poly::zero(&f7)), Err(Error::ZeroPolynomial));
        let (g, _, _) = Poly::zero(&f7).xgcd(&poly(&f7, &[3, 1])).unwrap();
        assert_eq!(g, poly(&f7, &[1, 5]));
    }

    fn expect_factors(f: &Field, got: &Factorization, want: &[(&[i64], usize)]) {
        let want: Vec<(Poly, usize)> = want.iter().map(|(d, m)| (poly(f, d), *m)).collect();
        assert_eq!(got.factors, want);
        assert_eq!(got.unit, Gf::ONE);
    }

    #[test]
    fn xn_minus_1_examples() {
        let f5 = fp(5);
        expect_factors(&f5, &factor_xn_minus_1(&f5, 10), &[(&[1, 1], 5), (&[1, 4], 5)]);
        expect_factors(
            &f5,
            &factor_xn_minus_1(&f5, 6),
            &[(&[1, 1], 1), (&[1, 4], 1), (&[1, 1, 1], 1), (&[1, 4, 1], 1)],
        );
        let f11 = fp(11);
        expect_factors(
            &f11,
            &factor_xn_minus_1(&f11, 5),
            &[(&[1, 2], 1), (&[1, 6], 1), (&[1, 7], 1), (&[1, 8], 1), (&[1, 10], 1)],
        );
        let f7 = fp(7);
        expect_factors(&f7, &factor_xn_minus_1(&f7, 3), &[(&[1, 3], 1), (&[1, 5], 1), (&[1, 6], 1)]);
        expect_factors(&f7, &factor_xn_minus_1(&f7, 1), &[(&[1, 6], 1)]);
    }

    #[test]
    fn xn_minus_1_agrees_with_general_factor() {
        for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)] {
            let f = Field::new(p, m, None).unwrap();
            for n in 1..=30 {
                let direct = factor_xn_minus_1(&f, n);
                let general = factor(&Poly::xn_minus_1(&f, n)).unwrap();
                assert_eq!(direct, general, "{f:?} n={n}");
                assert_eq!(direct.product(), Poly::xn_minus_1(&f, n));
                let mut core = n;
                while core % p as usize == 0 {
                    core /= p as usize;
                }
                if core == n {
                    assert!(direct.is_squarefree());
                    let total: usize = direct.factors.iter().map(|(g, _)| g.deg()).sum();
                    assert_eq!(total, n);
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f7 = fp(7);
        let got = factor(&poly(&f7, &[1, 1, 1])).unwrap();
        expect_factors(&f7, &got, &[(&[1, 3], 1), (&[1, 5], 1)]);
        let f5 = fp(5);
        let got = factor(&poly(&f5, &[1, 1, 1])).unwrap();
        expect_factors(&f5, &got, &[(&[1, 1, 1], 1)]);
        let got = factor(&Poly::constant(&f5, Gf(3))).unwrap();
        assert!(got.factors.is_empty());
        assert_eq!(got.unit, Gf(3));
        assert_eq!(factor(&Poly::zero(&f5)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn factor_with_repeated_and_nonmonic_parts() {
        let f3 = fp(3);
        // 2 (x+1)^3 (x^2+1)^2 x
        let target = &(&Poly::constant(&f3, Gf(2)) * &poly(&f3, &[1, 1]).pow(3))
            * &(&poly(&f3, &[1, 0, 1]).pow(2) * &Poly::x(&f3));
        let got = factor(&target).unwrap();
        assert_eq!(got.unit, Gf(2));
        assert_eq!(
            got.factors,
            vec![(poly(&f3, &[1, 0]), 1), (poly(&f3, &[1, 1]), 3), (poly(&f3, &[1, 0, 1]), 2)]
        );
        assert_eq!(got.product(), target);
    }

    #[test]
    fn factor_order_is_seed_independent() {
        let f = Field::new(3, 2, None).unwrap();
        let target = Poly::xn_minus_1(&f, 40);
        let a = factor_with_seed(&target, 1).unwrap();
        let b = factor_with_seed(&target, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.product(), target);
    }

    #[test]
    fn reciprocal_examples() {
        let f5 = fp(5);
        let g = poly(&f5, &[1, 2, 2, 1]);
        assert_eq!(g.reciprocal().poly, g);
        assert_eq!(poly(&f5, &[1, 4]).reciprocal().poly, poly(&f5, &[4, 1]));
        let f11 = fp(11);
        assert_eq!(poly(&f11, &[1, 7, 3]).reciprocal().poly, poly(&f11, &[3, 7, 1]));
        let r = poly(&f5, &[1, 2, 0]).reciprocal();
        assert!(!r.degree_preserved);
        assert_eq!(r.poly, poly(&f5, &[2, 1]));
    }

    #[test]
    fn self_reciprocal_examples() {
        let f5 = fp(5);
        assert!(poly(&f5, &[1, 4]).is_self_reciprocal().unwrap());
        assert!(poly(&f5, &[1, 1, 1]).is_self_reciprocal().unwrap());
        let f7 = fp(7);
        assert!(!poly(&f7, &[1, 3]).is_self_reciprocal().unwrap());
        // normalized but not palindromic
        assert!(poly(&f7, &[1, 5, 2, 6]).is_self_reciprocal().unwrap());
        assert_eq!(poly(&f7, &[2, 1]).is_self_reciprocal(), Err(Error::NotMonic));
        assert_eq!(poly(&f7, &[1, 1, 0]).is_self_reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn text_round_trip() {
        let f5 = fp(5);
        let g = Poly::parse(&f5, "(1,3,0,2,4)").unwrap();
        assert_eq!(g, poly(&f5, &[1, 3, 0, 2, 4]));
        assert_eq!(g.to_string(), "(1,3,0,2,4)");
        assert_eq!(g.to_expression(), "x^4 + 3x^3 + 2x + 4");
        let f9 = Field::new(3, 2, None).unwrap();
        let g = Poly::parse(&f9, "(1,w,w^5,2)").unwrap();
        assert_eq!(g.to_string(), "(1,w,w^5,2)");
        assert_eq!(Poly::parse(&f9, "1 w^2 w^6 2").unwrap().to_string(), "(1,w^2,w^6,2)");
        assert!(Poly::parse(&f5, "()").is_err());
    }
}
