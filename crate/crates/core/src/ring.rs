//! The ring R_{e,q} = F_q[u]/(u^e - 1) for e | q - 1.
//!
//! Since u^e - 1 = prod (u - alpha_i) splits into distinct linear factors, the
//! ring carries a complete set of orthogonal idempotents mu_1..mu_e and
//! decomposes as F_q^e. Each mu_i is built from a Bezout identity
//! `z_i G_i + h_i Ghat_i = 1` with `G_i = u - alpha_i`, `Ghat_i = (u^e - 1)/G_i`
//! and `mu_i = h_i Ghat_i`. The i-th canonical component of r is then r(alpha_i).
//!
//! The index i follows the chosen [`RootOrder`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::poly::Poly;

/// How the roots alpha_1..alpha_e (and hence mu_1..mu_e) are indexed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum RootOrder {
    /// Ascending canonical element order (alpha_1 = 1).
    #[default]
    Canonical,
    /// Ascending constant term of G_i = u - alpha_i, i.e. ascending -alpha_i.
    /// This is the order in which published idempotent tables list u + c factors.
    FactorConstant,
    /// An explicit permutation of the e-th roots of unity.
    Explicit(Vec<Gf>),
}

/// Orthogonal idempotents of R_{e,q} together with the data that built them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSystem {
    /// mu_i as polynomials in u of degree < e.
    pub mus: Vec<Poly>,
    /// (z_i, h_i) with z_i G_i + h_i Ghat_i = 1.
    pub bezout: Vec<(Poly, Poly)>,
    /// G_i = u - alpha_i
    pub linear: Vec<Poly>,
    /// Ghat_i = (u^e - 1) / G_i
    pub cofactors: Vec<Poly>,
}

struct Inner {
    field: Field,
    e: usize,
    order: RootOrder,
    roots: Vec<Gf>,
    system: IdempotentSystem,
}

/// R_{e,q} with a fixed root order. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.roots == other.0.roots)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots: Vec<String> = self.0.roots.iter().map(|&a| self.0.field.format(a)).collect();
        write!(f, "R_{{{},{}}}[roots {}]", self.0.e, self.0.field.q(), roots.join(","))
    }
}

impl Ring {
    pub fn new(field: &Field, e: usize) -> Result<Ring> {
        Ring::with_order(field, e, RootOrder::Canonical)
    }

    pub fn with_order(field: &Field, e: usize, order: RootOrder) -> Result<Ring> {
        if e < 2 {
            return Err(Error::BadRoots(format!("e = {e} must be at least 2")));
        }
        let canonical = field.nth_roots_of_unity(e)?;
        let roots = match &order {
            RootOrder::Canonical => canonical,
            RootOrder::FactorConstant => {
                let mut r = canonical;
                r.sort_by_key(|&a| field.neg(a));
                r
            }
            RootOrder::Explicit(r) => {
                let mut sorted = r.clone();
                sorted.sort();
                if sorted != canonical {
                    let shown: Vec<String> = r.iter().map(|&a| field.format(a)).collect();
                    return Err(Error::BadRoots(format!(
                        "[{}] is not a permutation of the {e}-th roots of unity",
                        shown.join(",")
                    )));
                }
                r.clone()
            }
        };
        let system = build_idempotents(field, e, &roots)?;
        Ok(Ring(Arc::new(Inner { field: field.clone(), e, order, roots, system })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn e(&self) -> usize {
        self.0.e
    }

    pub fn order(&self) -> &RootOrder {
        &self.0.order
    }

    pub fn roots(&self) -> &[Gf] {
        &self.0.roots
    }

    pub fn idempotents(&self) -> &IdempotentSystem {
        &self.0.system
    }

    /// u^e - 1 as a polynomial in u.
    pub fn modulus(&self) -> Poly {
        Poly::xn_minus_1(self.field(), self.e())
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), coeffs: vec![Gf::ZERO; self.e()] }
    }

    pub fn one(&self) -> RingElement {
        self.scalar(Gf::ONE)
    }

    /// The constant c (embedding of F_q).
    pub fn scalar(&self, c: Gf) -> RingElement {
        let mut el = self.zero();
        el.coeffs[0] = c;
        el
    }

    /// u^k
    pub fn u_power(&self, k: usize) -> RingElement {
        let mut el = self.zero();
        el.coeffs[k % self.e()] = Gf::ONE;
        el
    }

    /// mu_i, 0-based.
    pub fn mu(&self, i: usize) -> RingElement {
        self.from_poly(&self.0.system.mus[i])
    }

    /// From u-basis coefficients a_0..a_{e-1}.
    pub fn element(&self, coeffs: &[Gf]) -> Result<RingElement> {
        if coeffs.len() != self.e() {
            return Err(Error::LengthMismatch { expected: self.e(), found: coeffs.len() });
        }
        Ok(RingElement { ring: self.clone(), coeffs: coeffs.to_vec() })
    }

    /// Reduces a polynomial in u modulo u^e - 1.
    pub fn from_poly(&self, p: &Poly) -> RingElement {
        assert!(p.field() == self.field(), "{}", Error::FieldMismatch);
        let f = self.field();
        let mut coeffs = vec![Gf::ZERO; self.e()];
        for (i, &c) in p.coeffs().iter().enumerate() {
            let slot = &mut coeffs[i % self.e()];
            *slot = f.add(*slot, c);
        }
        RingElement { ring: self.clone(), coeffs }
    }

    /// sum s_i mu_i
    pub fn compose(&self, s: &[Gf]) -> Result<RingElement> {
        if s.len() != self.e() {
            return Err(Error::LengthMismatch { expected: self.e(), found: s.len() });
        }
        let f = self.field();
        let mut coeffs = vec![Gf::ZERO; self.e()];
        for (&si, mu) in s.iter().zip(&self.0.system.mus) {
            if si.is_zero() {
                continue;
            }
            for (j, &c) in mu.coeffs().iter().enumerate() {
                coeffs[j] = f.add(coeffs[j], f.mul(si, c));
            }
        }
        Ok(RingElement { ring: self.clone(), coeffs })
    }

    /// All q^e elements, in u-basis index order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let q = self.field().q() as u64;
        let total = q.pow(self.e() as u32);
        (0..total).map(move |mut idx| {
            let coeffs = (0..self.e())
                .map(|_| {
                    let c = Gf((idx % q) as u32);
                    idx /= q;
                    c
                })
                .collect();
            RingElement { ring: self.clone(), coeffs }
        })
    }
}

fn build_idempotents(field: &Field, e: usize, roots: &[Gf]) -> Result<IdempotentSystem> {
    let modulus = Poly::xn_minus_1(field, e);
    let mut system = IdempotentSystem {
        mus: Vec::with_capacity(e),
        bezout: Vec::with_capacity(e),
        linear: Vec::with_capacity(e),
        cofactors: Vec::with_capacity(e),
    };
    for &alpha in roots {
        let g = Poly::from_coeffs(field, vec![field.neg(alpha), Gf::ONE]);
        let ghat = modulus.div_exact(&g).expect("alpha is a root of u^e - 1");
        let (d, z, h) = g.xgcd(&ghat)?;
        debug_assert!(d.is_one());
        let mu = (&h * &ghat).rem(&modulus)?;
        system.mus.push(mu);
        system.bezout.push((z, h));
        system.linear.push(g);
        system.cofactors.push(ghat);
    }
    Ok(system)
}

/// An element a_0 + a_1 u + ... + a_{e-1} u^{e-1} of R_{e,q}, always reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    coeffs: Vec<Gf>,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// u-basis coefficients a_0..a_{e-1}.
    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.ring.field(), self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Evaluation at u = x.
    pub fn eval(&self, x: Gf) -> Gf {
        self.to_poly().eval(x)
    }

    /// Canonical components (s_1..s_e) with r = sum s_i mu_i; s_i = r(alpha_i).
    pub fn decompose(&self) -> Vec<Gf> {
        self.ring.roots().iter().map(|&a| self.eval(a)).collect()
    }

    /// Same components read off r * mu_i = s_i mu_i, without evaluating at the roots.
    pub fn decompose_via_idempotents(&self) -> Vec<Gf> {
        let f = self.ring.field();
        (0..self.ring.e())
            .map(|i| {
                let mu = self.ring.mu(i);
                let prod = self * &mu;
                let j = mu.coeffs.iter().position(|c| !c.is_zero()).expect("mu_i is nonzero");
                f.div(prod.coeffs[j], mu.coeffs[j]).expect("nonzero")
            })
            .collect()
    }

    /// A unit iff every canonical component is nonzero.
    pub fn is_unit(&self) -> bool {
        self.decompose().iter().all(|c| !c.is_zero())
    }

    pub fn scale(&self, c: Gf) -> RingElement {
        let f = self.ring.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    fn check(&self, other: &RingElement) {
        if self.ring != other.ring {
            panic!("{}", Error::RingMismatch);
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self * other)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = self.ring.field();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| match i {
                0 => f.format(c),
                1 => format!("{}*u", f.format(c)),
                _ => format!("{}*u^{i}", f.format(c)),
            })
            .collect();
        if terms.is_empty() {
            out.write_str("0")
        } else {
            out.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        let f = self.ring.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        let f = self.ring.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let f = self.ring.field();
        RingElement { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect() }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        let f = self.ring.field();
        let e = self.ring.e();
        let mut coeffs = vec![Gf::ZERO; e];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % e;
                coeffs[k] = f.add(coeffs[k], f.mul(a, b));
            }
        }
        RingElement { ring: self.ring.clone(), coeffs }
    }
}

/// A polynomial in x with coefficients in R_{e,q}, ascending, trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct RingPoly {
    ring: Ring,
    coeffs: Vec<RingElement>,
}

impl RingPoly {
    pub fn from_coeffs(ring: &Ring, mut coeffs: Vec<RingElement>) -> RingPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RingPoly { ring: ring.clone(), coeffs }
    }

    /// sum mu_i p_i(x) for component polynomials p_1..p_e over F_q.
    pub fn from_components(ring: &Ring, comps: &[Poly]) -> Result<RingPoly> {
        if comps.len() != ring.e() {
            return Err(Error::ComponentCount { expected: ring.e(), found: comps.len() });
        }
        let len = comps.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..len)
            .map(|j| {
                let s: Vec<Gf> = comps.iter().map(|p| p.coeff(j)).collect();
                ring.compose(&s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingPoly::from_coeffs(ring, coeffs))
    }

    /// x^n - 1 over the ring.
    pub fn xn_minus_1(ring: &Ring, n: usize) -> RingPoly {
        let f = ring.field();
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[0] = ring.scalar(f.neg(Gf::ONE));
        coeffs[n] = &coeffs[n] + &ring.one();
        RingPoly::from_coeffs(ring, coeffs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> RingElement {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Component polynomials: the i-th one collects the i-th canonical
    /// component of every coefficient.
    pub fn components(&self) -> Vec<Poly> {
        let f = self.ring.field();
        let decomposed: Vec<Vec<Gf>> = self.coeffs.iter().map(|c| c.decompose()).collect();
        (0..self.ring.e())
            .map(|i| Poly::from_coeffs(f, decomposed.iter().map(|s| s[i]).collect()))
            .collect()
    }
}

impl Mul for &RingPoly {
    type Output = RingPoly;
    fn mul(self, rhs: &RingPoly) -> RingPoly {
        assert!(self.ring == rhs.ring, "{}", Error::RingMismatch);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return RingPoly::from_coeffs(&self.ring, Vec::new());
        }
        let mut out = vec![self.ring.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RingPoly::from_coeffs(&self.ring, out)
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return out.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        out.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for RingPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}
