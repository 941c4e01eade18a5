//! Linear codes over F_q: canonical generator matrices, duals, hulls, weight
//! distributions and minimum distance.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::matrix::{self, Row};
use crate::poly::Poly;

/// Default cap on `q^k * n` for codeword enumeration.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A linear code stored by its reduced row-echelon generator matrix, so two
/// codes are equal exactly when their generators are.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Code spanned by `rows`, which may be dependent or empty.
    pub fn new(field: &Field, n: usize, rows: Vec<Row>) -> Result<LinearCode> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: r.len() });
        }
        let mut rows = rows;
        let pivots = matrix::rref(field, &mut rows);
        Ok(LinearCode { field: field.clone(), n, rows, pivots })
    }

    pub fn zero(field: &Field, n: usize) -> Result<LinearCode> {
        LinearCode::new(field, n, Vec::new())
    }

    pub fn full(field: &Field, n: usize) -> Result<LinearCode> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Gf::ONE } else { Gf::ZERO }).collect())
            .collect();
        LinearCode::new(field, n, rows)
    }

    /// Cyclic code of length n generated by a divisor g of x^n - 1.
    pub fn cyclic(g: &Poly, n: usize) -> Result<LinearCode> {
        let field = g.field();
        if !g.divides(&Poly::xn_minus_1(field, n)) {
            return Err(Error::NotDivisor { index: 0, poly: g.to_string(), n });
        }
        let k = n - g.deg();
        let rows = (0..k)
            .map(|j| {
                let mut row = vec![Gf::ZERO; n];
                for (i, &c) in g.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        LinearCode::new(field, n, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row-echelon generator matrix.
    pub fn generator(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Systematic parity-check matrix, i.e. a generator of the dual.
    pub fn parity_check(&self) -> Vec<Row> {
        matrix::nullspace(&self.field, &self.rows, self.n)
    }

    pub fn dual(&self) -> LinearCode {
        let rows = self.parity_check();
        LinearCode::new(&self.field, self.n, rows).expect("nullspace rows have length n")
    }

    pub fn contains(&self, v: &[Gf]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = r[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(row) {
                *x = self.field.sub(*x, self.field.mul(c, y));
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// `C + D`
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        LinearCode::new(&self.field, self.n, rows)
    }

    /// `C ∩ D`, computed as the dual of `C^⊥ + D^⊥`.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Dimension of `C ∩ C^⊥`, computed as `k - rank(G G^T)`.
    pub fn hull_dim(&self) -> usize {
        self.k() - matrix::rank(&self.field, &matrix::gram(&self.field, &self.rows))
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dim() == 0
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.hull_dim() == self.k()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// `n - k + 1 - d`
    pub fn singleton_defect(&self, d: usize) -> isize {
        (self.n + 1) as isize - self.k() as isize - d as isize
    }

    /// Number of codewords `q^k`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.k() as u32)
    }

    /// Work estimate `q^k * n` for direct enumeration.
    pub fn enumeration_cost(&self) -> u128 {
        let q = self.field.q() as u128;
        let mut cost = self.n as u128;
        for _ in 0..self.k() {
            cost = cost.saturating_mul(q);
        }
        cost
    }

    pub fn encode(&self, msg: &[Gf]) -> Result<Row> {
        if msg.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), found: msg.len() });
        }
        Ok(matrix::vec_mul(&self.field, msg, &self.rows))
    }

    /// Weight distribution by enumerating every codeword.
    pub fn weight_distribution(&self, budget: u128) -> Result<WeightDistribution> {
        let cost = self.enumeration_cost();
        if cost > budget {
            return Err(Error::BudgetExceeded(format!(
                "q^k * n = {}^{} * {} exceeds {budget}",
                self.field.q(),
                self.k(),
                self.n
            )));
        }
        let counts = enumerate_weights(&self.field, &self.rows, self.n);
        Ok(WeightDistribution { counts: counts.into_iter().map(BigUint::from).collect() })
    }

    /// Minimum distance, enumerating whichever of `C` and `C^⊥` is smaller.
    /// `d` is `None` for the zero code.
    pub fn min_distance(&self, budget: u128) -> Result<DistanceReport> {
        let dual = self.dual();
        let (distribution, method) = if self.enumeration_cost() <= dual.enumeration_cost() {
            (self.weight_distribution(budget)?, Method::Direct)
        } else {
            let dual_wd = dual.weight_distribution(budget)?;
            (dual_wd.macwilliams(self.field.q(), dual.k())?, Method::DualMacWilliams)
        };
        Ok(DistanceReport { d: distribution.min_distance(), method, distribution })
    }

    /// Minimum distance by direct enumeration only.
    pub fn min_distance_direct(&self, budget: u128) -> Result<Option<usize>> {
        Ok(self.weight_distribution(budget)?.min_distance())
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}]_{}", self.n, self.k(), self.field.q())
    }
}

/// How a minimum distance was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    DualMacWilliams,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::DualMacWilliams => "dual+macwilliams",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub d: Option<usize>,
    pub method: Method,
    pub distribution: WeightDistribution,
}

/// `counts[w]` is the number of codewords of weight w, for w = 0..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|c| *c != BigUint::ZERO).map(|i| i + 1)
    }

    /// Nonzero entries as (weight, count).
    pub fn sparse(&self) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != BigUint::ZERO)
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    /// Distribution of the dual of a `k`-dimensional code over F_q with this
    /// distribution, via Krawtchouk polynomials.
    pub fn macwilliams(&self, q: u32, k: usize) -> Result<WeightDistribution> {
        let n = self.n();
        if self.counts[0] != BigUint::from(1u32) {
            return Err(Error::BadDistribution("A_0 must be 1".into()));
        }
        let size = BigUint::from(q).pow(k as u32);
        if self.total() != size {
            return Err(Error::BadDistribution(format!("counts sum to {} not q^k = {size}", self.total())));
        }
        let size = BigInt::from(size);
        let binom = binomials(n);
        let qm1_pow: Vec<BigInt> = (0..=n).map(|j| BigInt::from(q - 1).pow(j as u32)).collect();
        let a: Vec<BigInt> = self.counts.iter().map(|c| BigInt::from(c.clone())).collect();
        let mut out = Vec::with_capacity(n + 1);
        for w in 0..=n {
            let mut total = BigInt::ZERO;
            for (i, ai) in a.iter().enumerate() {
                if ai.sign() == Sign::NoSign {
                    continue;
                }
                total += ai * krawtchouk(w, i, n, &binom, &qm1_pow);
            }
            if &total % &size != BigInt::ZERO {
                return Err(Error::BadDistribution(format!("B_{w} is not integral")));
            }
            let b = total / &size;
            let Some(b) = b.to_biguint() else {
                return Err(Error::BadDistribution(format!("B_{w} is negative")));
            };
            out.push(b);
        }
        Ok(WeightDistribution { counts: out })
    }
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::ZERO; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = BigInt::from(1);
        for j in 1..=i {
            c[i][j] = &c[i - 1][j - 1] + &c[i - 1][j];
        }
    }
    c
}

/// `K_w(i) = sum_j (-1)^j (q-1)^(w-j) C(i,j) C(n-i,w-j)`
fn krawtchouk(w: usize, i: usize, n: usize, binom: &[Vec<BigInt>], qm1_pow: &[BigInt]) -> BigInt {
    let mut k = BigInt::ZERO;
    for j in 0..=w.min(i) {
        if w - j > n - i {
            continue;
        }
        let term = &qm1_pow[w - j] * &binom[i][j] * &binom[n - i][w - j];
        if j % 2 == 0 {
            k += term;
        } else {
            k -= term;
        }
    }
    k
}

/// Histogram of codeword weights. The message space is split on its leading
/// coordinates across threads and each part is walked in reflected q-ary Gray
/// order, so consecutive codewords differ by a multiple of one generator row.
fn enumerate_weights(field: &Field, rows: &[Row], n: usize) -> Vec<u64> {
    let k = rows.len();
    let q = field.q() as usize;
    let threads = rayon::current_num_threads().max(1);
    let mut split = 0;
    let mut parts = 1usize;
    while split < k && parts < 8 * threads {
        split += 1;
        parts *= q;
    }
    let (head, tail) = rows.split_at(split);
    (0..parts)
        .into_par_iter()
        .map(|mut idx| {
            let mut prefix = Vec::with_capacity(split);
            for _ in 0..split {
                prefix.push(Gf((idx % q) as u32));
                idx /= q;
            }
            let base = matrix::vec_mul(field, &prefix, head);
            let base = if base.is_empty() { vec![Gf::ZERO; n] } else { base };
            gray_walk(field, base, tail, n)
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn gray_walk(field: &Field, mut v: Row, rows: &[Row], n: usize) -> Vec<u64> {
    let q = field.q();
    let m = rows.len();
    let mut counts = vec![0u64; n + 1];
    let mut weight = v.iter().filter(|x| !x.is_zero()).count();
    counts[weight] += 1;
    let mut digits = vec![0u32; m];
    let mut up = vec![true; m];
    loop {
        let mut j = 0;
        while j < m && (if up[j] { digits[j] + 1 == q } else { digits[j] == 0 }) {
            up[j] = !up[j];
            j += 1;
        }
        if j == m {
            break;
        }
        let old = Gf(digits[j]);
        digits[j] = if up[j] { digits[j] + 1 } else { digits[j] - 1 };
        let delta = field.sub(Gf(digits[j]), old);
        for (x, &r) in v.iter_mut().zip(&rows[j]) {
            if r.is_zero() {
                continue;
            }
            let was = !x.is_zero();
            *x = field.add(*x, field.mul(delta, r));
            match (was, !x.is_zero()) {
                (true, false) => weight -= 1,
                (false, true) => weight += 1,
                _ => {}
            }
        }
        counts[weight] += 1;
    }
    counts
}
