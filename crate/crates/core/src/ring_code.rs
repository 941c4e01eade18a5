//! Linear codes over R_{e,q}, i.e. R-submodules of R^n, held as F_q-subspaces
//! of F_q^{en} in u-basis coordinates.

use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::graymap::GrayMatrix;
use crate::linear_code::LinearCode;
use crate::matrix::{self, Row};
use crate::ring::{Ring, RingElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingLinearCode {
    ring: Ring,
    n: usize,
    /// F_q basis in rref, coordinate `t * e + a` holding the u^a coefficient of entry t.
    basis: Vec<Row>,
}

impl RingLinearCode {
    /// R-span of `gens`.
    pub fn new(ring: &Ring, n: usize, gens: &[Vec<RingElement>]) -> Result<RingLinearCode> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut rows = Vec::with_capacity(gens.len() * ring.e());
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: g.len() });
            }
            if g.iter().any(|x| x.ring() != ring) {
                return Err(Error::RingMismatch);
            }
            for j in 0..ring.e() {
                let uj = ring.u_power(j);
                let shifted: Vec<RingElement> = g.iter().map(|x| x * &uj).collect();
                rows.push(flatten(&shifted));
            }
        }
        Ok(RingLinearCode::from_rows(ring, n, rows))
    }

    fn from_rows(ring: &Ring, n: usize, mut rows: Vec<Row>) -> RingLinearCode {
        matrix::rref(ring.field(), &mut rows);
        RingLinearCode { ring: ring.clone(), n, basis: rows }
    }

    /// Code spanned by `count` uniformly random generators.
    pub fn random<R: rand::Rng>(ring: &Ring, n: usize, count: usize, rng: &mut R) -> Result<RingLinearCode> {
        let q = ring.field().q();
        let gens: Vec<Vec<RingElement>> = (0..count)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let c: Vec<Gf> = (0..ring.e()).map(|_| Gf(rng.gen_range(0..q))).collect();
                        ring.element(&c).expect("length e")
                    })
                    .collect()
            })
            .collect();
        RingLinearCode::new(ring, n, &gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension over F_q, so the code has q^dim elements.
    pub fn fq_dim(&self) -> usize {
        self.basis.len()
    }

    /// F_q basis as ring vectors.
    pub fn basis(&self) -> Vec<Vec<RingElement>> {
        self.basis.iter().map(|r| unflatten(&self.ring, r)).collect()
    }

    /// `dim_Fq(mu_i C)` for each i. The code is a free R-module exactly when
    /// these are all equal.
    pub fn component_dims(&self) -> Vec<usize> {
        let basis = self.basis();
        (0..self.ring.e())
            .map(|i| {
                let mu = self.ring.mu(i);
                let rows: Vec<Row> = basis
                    .iter()
                    .map(|v| flatten(&v.iter().map(|x| x * &mu).collect::<Vec<_>>()))
                    .collect();
                matrix::rank(self.ring.field(), &rows)
            })
            .collect()
    }

    pub fn is_free(&self) -> bool {
        self.component_dims().windows(2).all(|w| w[0] == w[1])
    }

    pub fn contains(&self, v: &[RingElement]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(flatten(v));
        matrix::rank(self.ring.field(), &rows) == self.basis.len()
    }

    /// `{x in R^n : x . c = 0 in R for all c in C}`, solved as an F_q linear
    /// system in the u-coordinates of x.
    pub fn dual(&self) -> RingLinearCode {
        let e = self.ring.e();
        let f = self.ring.field();
        let mut eqs = Vec::with_capacity(self.basis.len() * e);
        for c in &self.basis {
            // coefficient of u^s in sum_t x_t c_t
            for s in 0..e {
                let mut eq = vec![Gf::ZERO; self.n * e];
                for t in 0..self.n {
                    for a in 0..e {
                        let b = (s + e - a) % e;
                        eq[t * e + a] = f.add(eq[t * e + a], c[t * e + b]);
                    }
                }
                eqs.push(eq);
            }
        }
        let rows = matrix::nullspace(f, &eqs, self.n * e);
        RingLinearCode::from_rows(&self.ring, self.n, rows)
    }

    pub fn gray_image(&self, m: &GrayMatrix) -> Result<LinearCode> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let rows = self.basis().iter().map(|v| m.gray(v)).collect::<Result<Vec<_>>>()?;
        LinearCode::new(self.ring.field(), self.n * self.ring.e(), rows)
    }
}

fn flatten(v: &[RingElement]) -> Row {
    v.iter().flat_map(|x| x.coeffs().iter().copied()).collect()
}

fn unflatten(ring: &Ring, row: &[Gf]) -> Vec<RingElement> {
    row.chunks(ring.e()).map(|c| ring.element(c).expect("length e")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dual_is_orthogonal_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (q, e, n) in [(5, 2, 3), (7, 3, 2), (13, 3, 3), (5, 4, 2)] {
            let ring = Ring::new(&Field::prime(q).unwrap(), e).unwrap();
            for count in 1..3 {
                let c = RingLinearCode::random(&ring, n, count, &mut rng).unwrap();
                let d = c.dual();
                assert_eq!(c.fq_dim() + d.fq_dim(), e * n);
                for x in c.basis() {
                    for y in d.basis() {
                        let ip = x.iter().zip(&y).fold(ring.zero(), |acc, (a, b)| &acc + &(a * b));
                        assert!(ip.is_zero());
                    }
                }
                assert_eq!(d.dual(), c);
            }
        }
    }

    #[test]
    fn span_is_closed_under_u() {
        let ring = Ring::new(&Field::prime(7).unwrap(), 3).unwrap();
        let g = vec![ring.one(), ring.u_power(1)];
        let c = RingLinearCode::new(&ring, 2, std::slice::from_ref(&g)).unwrap();
        assert_eq!(c.fq_dim(), 3);
        let u2g: Vec<RingElement> = g.iter().map(|x| x * &ring.u_power(2)).collect();
        assert!(c.contains(&u2g));
        assert!(!c.contains(&[ring.one(), ring.zero()]));
    }
}
