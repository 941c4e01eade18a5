//! Cyclic codes over R_{e,q} described by their component generators.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graymap::GrayMatrix;
use crate::linear_code::LinearCode;
use crate::poly::{factor_xn_minus_1, Poly};
use crate::ring::{Ring, RingElement, RingPoly};
use crate::ring_code::RingLinearCode;

/// `C = mu_1 C_1 + ... + mu_e C_e` with `C_i = <g_i>` cyclic of length n over F_q.
#[derive(Clone, PartialEq, Eq)]
pub struct RingCyclicCode {
    ring: Ring,
    n: usize,
    comps: Vec<Poly>,
    cofactors: Vec<Poly>,
    gray: Option<GrayMatrix>,
}

/// Why a code failed the component LCD criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcdViolation {
    NotSelfReciprocal,
    /// An irreducible factor divides g_i with a multiplicity strictly between
    /// 0 and its multiplicity in x^n - 1.
    PartialMultiplicity { factor: Poly, in_component: usize, in_xn_minus_1: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcdCertificate {
    /// Index of the first failing component, with the violated condition.
    pub failure: Option<(usize, LcdViolation)>,
}

impl LcdCertificate {
    pub fn is_lcd(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for LcdCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("LCD"),
            Some((i, LcdViolation::NotSelfReciprocal)) => {
                write!(f, "not LCD: g_{} is not self-reciprocal", i + 1)
            }
            Some((i, LcdViolation::PartialMultiplicity { factor, in_component, in_xn_minus_1 })) => write!(
                f,
                "not LCD: {factor} has multiplicity {in_component} in g_{} but {in_xn_minus_1} in x^n - 1",
                i + 1
            ),
        }
    }
}

impl RingCyclicCode {
    /// Components are normalized to monic; each must divide x^n - 1.
    pub fn build(ring: &Ring, n: usize, comps: &[Poly]) -> Result<RingCyclicCode> {
        if comps.len() != ring.e() {
            return Err(Error::ComponentCount { expected: ring.e(), found: comps.len() });
        }
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let xn = Poly::xn_minus_1(ring.field(), n);
        let mut monic = Vec::with_capacity(comps.len());
        let mut cofactors = Vec::with_capacity(comps.len());
        for (index, g) in comps.iter().enumerate() {
            if g.field() != ring.field() {
                return Err(Error::FieldMismatch);
            }
            let g = if g.is_zero() { g.clone() } else { g.monic() };
            let h = if g.is_zero() { None } else { xn.div_exact(&g) };
            let Some(h) = h else {
                return Err(Error::NotDivisor { index: index + 1, poly: g.to_string(), n });
            };
            monic.push(g);
            cofactors.push(h);
        }
        let code = RingCyclicCode { ring: ring.clone(), n, comps: monic, cofactors, gray: None };
        debug_assert!(code.generator_identity_holds());
        Ok(code)
    }

    pub fn with_gray_matrix(mut self, m: GrayMatrix) -> Result<RingCyclicCode> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        self.gray = Some(m);
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    /// `h_i = (x^n - 1) / g_i`
    pub fn cofactors(&self) -> &[Poly] {
        &self.cofactors
    }

    pub fn gray_matrix(&self) -> Option<&GrayMatrix> {
        self.gray.as_ref()
    }

    /// `sum (n - deg g_i)`, the F_q-dimension of the code and of its Gray image.
    pub fn k(&self) -> usize {
        self.comps.iter().map(|g| self.n - g.deg()).sum()
    }

    /// `q^k`
    pub fn size(&self) -> BigUint {
        BigUint::from(self.ring.field().q()).pow(self.k() as u32)
    }

    /// `g(x) = sum mu_i g_i(x)`
    pub fn ring_generator(&self) -> RingPoly {
        RingPoly::from_components(&self.ring, &self.comps).expect("e components")
    }

    /// `h(x) = sum mu_i h_i(x)`
    pub fn ring_check_polynomial(&self) -> RingPoly {
        RingPoly::from_components(&self.ring, &self.cofactors).expect("e components")
    }

    /// Whether `g(x) h(x) = x^n - 1` holds by multiplication in R_{e,q}[x].
    pub fn generator_identity_holds(&self) -> bool {
        &self.ring_generator() * &self.ring_check_polynomial() == RingPoly::xn_minus_1(&self.ring, self.n)
    }

    /// Components of the dual are the monic reciprocals of the cofactors.
    pub fn dual(&self) -> RingCyclicCode {
        let comps: Vec<Poly> = self.cofactors.iter().map(|h| h.reciprocal().poly.monic()).collect();
        let mut dual = RingCyclicCode::build(&self.ring, self.n, &comps).expect("reciprocal cofactors divide x^n - 1");
        dual.gray = self.gray.clone();
        dual
    }

    pub fn is_free(&self) -> bool {
        self.comps.windows(2).all(|w| w[0].deg() == w[1].deg())
    }

    /// Component LCD criteria: every g_i self-reciprocal and, when p | n,
    /// every irreducible factor of x^n - 1 divides g_i fully or not at all.
    pub fn lcd_certificate(&self) -> LcdCertificate {
        let f = self.ring.field();
        let repeated = self.n.is_multiple_of(f.p() as usize);
        let factorization = repeated.then(|| factor_xn_minus_1(f, self.n));
        for (i, g) in self.comps.iter().enumerate() {
            if !g.is_self_reciprocal().unwrap_or(false) {
                return LcdCertificate { failure: Some((i, LcdViolation::NotSelfReciprocal)) };
            }
            let Some(fac) = &factorization else { continue };
            for (p, full) in &fac.factors {
                let m = multiplicity(g, p);
                if m != 0 && m != *full {
                    let violation =
                        LcdViolation::PartialMultiplicity { factor: p.clone(), in_component: m, in_xn_minus_1: *full };
                    return LcdCertificate { failure: Some((i, violation)) };
                }
            }
        }
        LcdCertificate { failure: None }
    }

    pub fn is_lcd(&self) -> bool {
        self.lcd_certificate().is_lcd()
    }

    /// Every component code equals its own dual.
    pub fn is_self_dual(&self) -> bool {
        self.comps
            .iter()
            .zip(&self.cofactors)
            .all(|(g, h)| *g == h.reciprocal().poly.monic())
    }

    pub fn component_codes(&self) -> Vec<LinearCode> {
        self.comps
            .iter()
            .map(|g| LinearCode::cyclic(g, self.n).expect("components divide x^n - 1"))
            .collect()
    }

    /// F_q spanning vectors `mu_i x^j g_i(x)` as ring vectors.
    pub fn spanning_vectors(&self) -> Vec<Vec<RingElement>> {
        let mut out = Vec::with_capacity(self.k());
        for (i, g) in self.comps.iter().enumerate() {
            let mu = self.ring.mu(i);
            for j in 0..self.n - g.deg() {
                let mut v = vec![self.ring.zero(); self.n];
                for (t, &c) in g.coeffs().iter().enumerate() {
                    v[t + j] = mu.scale(c);
                }
                out.push(v);
            }
        }
        out
    }

    /// The same code as a general R-linear code.
    pub fn to_ring_linear_code(&self) -> RingLinearCode {
        RingLinearCode::new(&self.ring, self.n, &self.spanning_vectors()).expect("vectors have length n")
    }

    /// `[en, k]` image under `m`.
    pub fn gray_image_with(&self, m: &GrayMatrix) -> Result<LinearCode> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let rows = self.spanning_vectors().iter().map(|v| m.gray(v)).collect::<Result<Vec<_>>>()?;
        LinearCode::new(self.ring.field(), self.ring.e() * self.n, rows)
    }

    /// Image under the attached Gray matrix.
    pub fn gray_image(&self) -> Result<LinearCode> {
        let m = self.gray.as_ref().ok_or_else(|| Error::BadSpec("no Gray matrix attached".into()))?;
        self.gray_image_with(m)
    }
}

fn multiplicity(g: &Poly, p: &Poly) -> usize {
    let mut m = 0;
    let mut rest = g.clone();
    while let Some(q) = rest.div_exact(p) {
        rest = q;
        m += 1;
    }
    m
}

impl fmt::Display for RingCyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.comps.iter().map(|g| g.to_string()).collect();
        write!(f, "n={} g=[{}]", self.n, comps.join(", "))
    }
}

impl fmt::Debug for RingCyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingCyclicCode(q={}, e={}, {self})", self.ring.field().q(), self.ring.e())
    }
}

/// `mu_1 + ... ` over a subset of indices; a zero divisor unless the subset is everything.
pub fn idempotent_sum(ring: &Ring, subset: &[usize]) -> RingElement {
    subset.iter().fold(ring.zero(), |acc, &i| &acc + &ring.mu(i))
}

/// Component generators from rows of descending integer tuples.
pub fn comps_from_ints(ring: &Ring, comps: &[&[i64]]) -> Vec<Poly> {
    comps.iter().map(|c| Poly::from_ints(ring.field(), c)).collect()
}
