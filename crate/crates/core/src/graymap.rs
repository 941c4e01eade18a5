//! Gray maps R_{e,q} -> F_q^e given by r -> (s_1,..,s_e) M with M M^T = gamma I.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::matrix::{self, Row};
use crate::ring::{Ring, RingElement};

#[derive(Clone, PartialEq, Eq)]
pub struct GrayMatrix {
    ring: Ring,
    rows: Vec<Row>,
    gamma: Gf,
    inverse: Vec<Row>,
}

impl GrayMatrix {
    /// Checks `M M^T = gamma I` with gamma nonzero and gamma^e a square.
    pub fn new(ring: &Ring, rows: Vec<Row>) -> Result<GrayMatrix> {
        GrayMatrix::validate(ring, rows, false)
    }

    /// Like [`GrayMatrix::new`]; `allow_any_gamma` skips the gamma^e square test.
    pub fn validate(ring: &Ring, rows: Vec<Row>, allow_any_gamma: bool) -> Result<GrayMatrix> {
        let e = ring.e();
        let f = ring.field();
        if rows.len() != e {
            return Err(Error::LengthMismatch { expected: e, found: rows.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != e) {
            return Err(Error::LengthMismatch { expected: e, found: r.len() });
        }
        let gram = matrix::gram(f, &rows);
        let gamma = gram[0][0];
        for (i, row) in gram.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j { gamma } else { Gf::ZERO };
                if x != want {
                    return Err(Error::NotScalarGram);
                }
            }
        }
        if gamma.is_zero() {
            return Err(Error::GammaZero);
        }
        let ge = f.pow_u(gamma, e as u64);
        if !allow_any_gamma && !f.is_square(ge)? {
            return Err(Error::GammaNotSquare(f.format(ge)));
        }
        let inverse = matrix::inverse(f, &rows).expect("M M^T = gamma I with gamma != 0");
        Ok(GrayMatrix { ring: ring.clone(), rows, gamma, inverse })
    }

    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Result<GrayMatrix> {
        let f = ring.field();
        GrayMatrix::new(ring, rows.iter().map(|r| r.iter().map(|&c| f.from_int(c)).collect()).collect())
    }

    /// Parses semicolon-separated rows such as `3,2;2,2` or `1,-1;1,1`.
    pub fn parse(ring: &Ring, s: &str, allow_any_gamma: bool) -> Result<GrayMatrix> {
        GrayMatrix::validate(ring, parse_rows(ring.field(), s)?, allow_any_gamma)
    }

    /// First valid matrix in row-lexicographic order, optionally with a fixed gamma.
    pub fn find(ring: &Ring, gamma: Option<Gf>) -> Result<GrayMatrix> {
        let e = ring.e();
        let f = ring.field();
        if e > 4 || f.q() > 49 {
            return Err(Error::SearchTooLarge);
        }
        if let Some(g) = gamma {
            if g.is_zero() {
                return Err(Error::GammaZero);
            }
            let ge = f.pow_u(g, e as u64);
            if !f.is_square(ge)? {
                return Err(Error::GammaNotSquare(f.format(ge)));
            }
        }
        let candidates: Vec<Row> = lex_vectors(f, e).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        let mut rows = Vec::with_capacity(e);
        if extend(f, e, gamma, &candidates, &mut rows) {
            return GrayMatrix::new(ring, rows);
        }
        Err(Error::SearchExhausted)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn gamma(&self) -> Gf {
        self.gamma
    }

    /// Whether gamma^e is a square, i.e. the matrix was accepted without the escape flag.
    pub fn gamma_condition_holds(&self) -> bool {
        let f = self.ring.field();
        f.is_square(f.pow_u(self.gamma, self.ring.e() as u64)).unwrap_or(false)
    }

    pub fn gray_element(&self, r: &RingElement) -> Row {
        assert!(r.ring() == &self.ring, "{}", Error::RingMismatch);
        matrix::vec_mul(self.ring.field(), &r.decompose(), &self.rows)
    }

    /// Concatenated blocks `decompose(r_j) M`.
    pub fn gray(&self, v: &[RingElement]) -> Result<Row> {
        if v.iter().any(|r| r.ring() != &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(v.iter().flat_map(|r| self.gray_element(r)).collect())
    }

    pub fn ungray(&self, w: &[Gf]) -> Result<Vec<RingElement>> {
        let e = self.ring.e();
        if !w.len().is_multiple_of(e) {
            return Err(Error::LengthMismatch { expected: w.len().next_multiple_of(e), found: w.len() });
        }
        w.chunks(e)
            .map(|block| self.ring.compose(&matrix::vec_mul(self.ring.field(), block, &self.inverse)))
            .collect()
    }

    pub fn gray_weight(&self, r: &RingElement) -> usize {
        self.gray_element(r).iter().filter(|x| !x.is_zero()).count()
    }

    pub fn gray_weight_vec(&self, v: &[RingElement]) -> usize {
        v.iter().map(|r| self.gray_weight(r)).sum()
    }

    pub fn gray_distance(&self, x: &[RingElement], y: &[RingElement]) -> Result<usize> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { expected: x.len(), found: y.len() });
        }
        let diff = x.iter().zip(y).map(|(a, b)| a.try_add(&-b)).collect::<Result<Vec<_>>>()?;
        Ok(self.gray_weight_vec(&diff))
    }
}

impl fmt::Display for GrayMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.ring.field();
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| field.format(x)).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for GrayMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrayMatrix({self}, gamma={})", self.ring.field().format(self.gamma))
    }
}

pub fn parse_rows(field: &Field, s: &str) -> Result<Vec<Row>> {
    s.split(';')
        .map(|row| row.split(',').map(|x| field.parse(x.trim())).collect())
        .collect()
}

/// All vectors of F_q^e, first coordinate most significant.
fn lex_vectors(field: &Field, e: usize) -> impl Iterator<Item = Row> {
    let q = field.q() as u64;
    (0..q.pow(e as u32)).map(move |mut idx| {
        let mut v = vec![Gf::ZERO; e];
        for slot in v.iter_mut().rev() {
            *slot = Gf((idx % q) as u32);
            idx /= q;
        }
        v
    })
}

fn extend(f: &Field, e: usize, gamma: Option<Gf>, candidates: &[Row], rows: &mut Vec<Row>) -> bool {
    if rows.len() == e {
        return true;
    }
    for v in candidates {
        let norm = matrix::dot(f, v, v);
        let ok = match gamma {
            Some(g) => norm == g,
            None if rows.is_empty() => {
                !norm.is_zero() && f.is_square(f.pow_u(norm, e as u64)).unwrap_or(false)
            }
            None => norm == matrix::dot(f, &rows[0], &rows[0]),
        };
        if !ok || rows.iter().any(|r| !matrix::dot(f, r, v).is_zero()) {
            continue;
        }
        rows.push(v.clone());
        if extend(f, e, gamma, candidates, rows) {
            return true;
        }
        rows.pop();
    }
    false
}
