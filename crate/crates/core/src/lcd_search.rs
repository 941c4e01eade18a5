//! Exhaustive search over component generators of cyclic codes over R_{e,q}.

use std::cmp::Ordering;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codespec::CodeSpec;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::graymap::GrayMatrix;
use crate::linear_code::{Method, DEFAULT_BUDGET};
use crate::poly::{factor_xn_minus_1, Poly};
use crate::ring::Ring;
use crate::ring_cyclic::RingCyclicCode;

/// Default cap on the number of divisors or component tuples examined.
pub const DEFAULT_MAX_COMBINATIONS: u128 = 100_000;

/// A bundled best-known-code entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestKnown {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub label: String,
}

pub fn best_known() -> &'static [BestKnown] {
    static TABLE: OnceLock<Vec<BestKnown>> = OnceLock::new();
    TABLE.get_or_init(|| {
        serde_json::from_str(include_str!("../data/best_known.json")).expect("bundled table is valid JSON")
    })
}

/// Label of a bundled entry with exactly these parameters.
pub fn optimal_ref(q: u32, n: usize, k: usize, d: usize) -> Option<&'static str> {
    best_known()
        .iter()
        .find(|b| (b.q, b.n, b.k, b.d) == (q, n, k, d))
        .map(|b| b.label.as_str())
}

/// All monic divisors of x^n - 1 in canonical order.
pub fn divisors_of_xn_minus_1(field: &Field, n: usize, budget: u128) -> Result<Vec<Poly>> {
    let fac = factor_xn_minus_1(field, n);
    let count = fac.divisor_count();
    if count > budget {
        return Err(Error::BudgetExceeded(format!("x^{n} - 1 has {count} divisors")));
    }
    let mut divisors = vec![Poly::one(field)];
    for (p, m) in &fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (m + 1));
        for d in &divisors {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..*m {
                power = &power * p;
                next.push(power.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(divisors)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfReciprocalDivisor {
    pub poly: Poly,
    /// Every irreducible factor of x^n - 1 divides `poly` fully or not at all.
    /// Always true when gcd(n, q) = 1.
    pub multiplicity_compliant: bool,
}

pub fn self_reciprocal_divisors(field: &Field, n: usize, budget: u128) -> Result<Vec<SelfReciprocalDivisor>> {
    let fac = factor_xn_minus_1(field, n);
    Ok(divisors_of_xn_minus_1(field, n, budget)?
        .into_iter()
        .filter(|d| d.is_self_reciprocal().unwrap_or(false))
        .map(|poly| {
            let multiplicity_compliant = fac.factors.iter().all(|(p, m)| {
                let mut k = 0;
                let mut rest = poly.clone();
                while let Some(q) = rest.div_exact(p) {
                    rest = q;
                    k += 1;
                }
                k == 0 || k == *m
            });
            SelfReciprocalDivisor { poly, multiplicity_compliant }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub p: u64,
    pub m: u32,
    pub e: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Semicolon-separated rows; searched for automatically when absent.
    pub gray_matrix: Option<String>,
    pub allow_any_gamma: bool,
    pub lcd_only: bool,
    pub non_free_only: bool,
    pub min_k: usize,
    pub min_d: usize,
    pub max_combinations: u128,
    pub distance_budget: u128,
}

impl SearchSpec {
    pub fn new(p: u64, m: u32, e: usize, n: usize) -> SearchSpec {
        SearchSpec {
            p,
            m,
            e,
            n_min: n,
            n_max: n,
            gray_matrix: None,
            allow_any_gamma: false,
            lcd_only: false,
            non_free_only: false,
            min_k: 0,
            min_d: 0,
            max_combinations: DEFAULT_MAX_COMBINATIONS,
            distance_budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub spec: CodeSpec,
    /// `[n,k,d]_q` of the Gray image.
    pub params: String,
    pub length: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub method: Option<Method>,
    pub free: bool,
    pub lcd: bool,
    pub self_dual: bool,
    pub hull_dim: usize,
    pub singleton_defect: Option<isize>,
    pub mds: bool,
    pub optimal_ref: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub results: Vec<SearchResult>,
    /// Set when the combination budget cut the search short.
    pub truncated: bool,
    pub examined: usize,
}

/// Classifies and certifies one code under `m`.
pub fn evaluate(code: &RingCyclicCode, m: &GrayMatrix, distance_budget: u128) -> Result<SearchResult> {
    let image = code.gray_image_with(m)?;
    let q = code.ring().field().q();
    let (d, method) = match image.min_distance(distance_budget) {
        Ok(r) => (r.d, Some(r.method)),
        Err(Error::BudgetExceeded(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let singleton_defect = d.map(|d| image.singleton_defect(d));
    let params = match d {
        Some(d) => format!("[{},{},{d}]_{q}", image.n(), image.k()),
        None if image.k() == 0 => format!("[{},0]_{q}", image.n()),
        None => format!("[{},{},?]_{q}", image.n(), image.k()),
    };
    let code = code.clone().with_gray_matrix(m.clone())?;
    Ok(SearchResult {
        spec: CodeSpec::from_code(&code, None),
        params,
        length: image.n(),
        k: image.k(),
        d,
        method,
        free: code.is_free(),
        lcd: code.is_lcd(),
        self_dual: code.is_self_dual(),
        hull_dim: image.hull_dim(),
        singleton_defect,
        mds: singleton_defect == Some(0),
        optimal_ref: d.and_then(|d| optimal_ref(q, image.n(), image.k(), d)).map(str::to_string),
    })
}

pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    let field = Field::new(spec.p, spec.m, None)?;
    let ring = Ring::new(&field, spec.e)?;
    let gray = match &spec.gray_matrix {
        Some(s) => GrayMatrix::parse(&ring, s, spec.allow_any_gamma)?,
        None => GrayMatrix::find(&ring, None)?,
    };
    if spec.n_min == 0 || spec.n_min > spec.n_max {
        return Err(Error::BadSpec(format!("empty length range {}..={}", spec.n_min, spec.n_max)));
    }
    let mut remaining = spec.max_combinations;
    let mut truncated = false;
    let mut examined = 0;
    let mut results = Vec::new();
    for n in spec.n_min..=spec.n_max {
        if remaining == 0 {
            truncated = true;
            break;
        }
        let admissible: Vec<Poly> = if spec.lcd_only {
            self_reciprocal_divisors(&field, n, spec.max_combinations)?
                .into_iter()
                .filter(|d| d.multiplicity_compliant)
                .map(|d| d.poly)
                .collect()
        } else {
            divisors_of_xn_minus_1(&field, n, spec.max_combinations)?
        };
        let total = (admissible.len() as u128).checked_pow(spec.e as u32).unwrap_or(u128::MAX);
        let take = total.min(remaining);
        truncated |= take < total;
        remaining -= take;
        examined += take as usize;
        let found: Vec<SearchResult> = (0..take as usize)
            .into_par_iter()
            .map(|idx| {
                let comps = tuple(&admissible, spec.e, idx);
                let code = RingCyclicCode::build(&ring, n, &comps)?;
                if spec.non_free_only && code.is_free() {
                    return Ok(None);
                }
                if spec.lcd_only && !code.is_lcd() {
                    return Ok(None);
                }
                if code.k() < spec.min_k {
                    return Ok(None);
                }
                let r = evaluate(&code, &gray, spec.distance_budget)?;
                if spec.min_d > 0 && r.d.is_none_or(|d| d < spec.min_d) {
                    return Ok(None);
                }
                Ok(Some(r))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        results.extend(found);
    }
    results.sort_by(rank);
    Ok(SearchOutcome { results, truncated, examined })
}

/// The idx-th e-tuple over `items`, first component most significant.
fn tuple(items: &[Poly], e: usize, mut idx: usize) -> Vec<Poly> {
    let mut out = vec![items[0].clone(); e];
    for slot in out.iter_mut().rev() {
        *slot = items[idx % items.len()].clone();
        idx /= items.len();
    }
    out
}

fn rank(a: &SearchResult, b: &SearchResult) -> Ordering {
    let d = |r: &SearchResult| r.d.map_or(-1, |d| d as i64);
    d(b).cmp(&d(a))
        .then(b.k.cmp(&a.k))
        .then(a.spec.n.cmp(&b.spec.n))
        .then_with(|| {
            let field = Field::new(a.spec.p, a.spec.m, None).expect("valid field");
            let ca = a.spec.components(&field).expect("valid spec");
            let cb = b.spec.components(&field).expect("valid spec");
            ca.iter()
                .zip(&cb)
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_counts() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(divisors_of_xn_minus_1(&f5, 6, 1000).unwrap().len(), 16);
        assert_eq!(divisors_of_xn_minus_1(&f5, 10, 1000).unwrap().len(), 36);
        let one = divisors_of_xn_minus_1(&f5, 1, 1000).unwrap();
        assert_eq!(one, vec![Poly::one(&f5), Poly::from_ints(&f5, &[1, 4])]);
        assert!(matches!(divisors_of_xn_minus_1(&f5, 10, 10), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn self_reciprocal_examples() {
        let f5 = Field::prime(5).unwrap();
        let sr: Vec<Poly> = self_reciprocal_divisors(&f5, 6, 1000).unwrap().into_iter().map(|d| d.poly).collect();
        for g in [&[1, 4][..], &[1, 2, 2, 1], &[1, 1, 1], &[1], &[1, 0, 0, 0, 0, 0, 4]] {
            assert!(sr.contains(&Poly::from_ints(&f5, g)), "{g:?}");
        }
        let f7 = Field::prime(7).unwrap();
        let sr: Vec<Poly> = self_reciprocal_divisors(&f7, 3, 1000).unwrap().into_iter().map(|d| d.poly).collect();
        assert!(sr.contains(&Poly::from_ints(&f7, &[1, 6])));
        assert!(sr.contains(&Poly::from_ints(&f7, &[1, 1, 1])));
        let sr10 = self_reciprocal_divisors(&f5, 10, 1000).unwrap();
        let x_minus_1 = sr10.iter().find(|d| d.poly == Poly::from_ints(&f5, &[1, 4])).unwrap();
        assert!(!x_minus_1.multiplicity_compliant);
    }

    #[test]
    fn lcd_non_free_search_finds_known_entry() {
        let mut spec = SearchSpec::new(5, 1, 2, 6);
        spec.lcd_only = true;
        spec.non_free_only = true;
        spec.gray_matrix = Some("1,4;1,1".into());
        let out = search(&spec).unwrap();
        assert!(!out.truncated);
        assert!(out.results.iter().any(|r| r.params == "[12,8,4]_5"));
        assert!(out.results.iter().all(|r| r.lcd && r.hull_dim == 0 && !r.free));
        assert_eq!(out, search(&spec).unwrap());
    }

    #[test]
    fn smallest_space() {
        let out = search(&SearchSpec::new(3, 1, 2, 1)).unwrap();
        assert_eq!(out.results.len(), 4);
        assert_eq!(out.examined, 4);
    }

    #[test]
    fn truncation_is_reported() {
        let mut spec = SearchSpec::new(5, 1, 2, 6);
        spec.max_combinations = 20;
        let out = search(&spec).unwrap();
        assert!(out.truncated);
        assert_eq!(out.examined, 20);
    }

    #[test]
    fn bundled_reference() {
        assert_eq!(optimal_ref(5, 20, 15, 4), Some("Optimal"));
        assert_eq!(optimal_ref(7, 24, 19, 4), Some("BKLC"));
        assert_eq!(optimal_ref(7, 24, 19, 5), None);
    }
}
