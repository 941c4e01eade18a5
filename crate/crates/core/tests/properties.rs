use proptest::prelude::*;

use ringcodes::matrix;
use ringcodes::{factor, Field, Gf, GrayMatrix, LinearCode, Poly, Ring, RingElement, RingLinearCode};

const FIELDS: [(u64, u32); 7] = [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (5, 2), (3, 3)];

/// (p, m, e) with e | q - 1, so the ring splits.
const RINGS: [(u64, u32, usize); 7] = [(3, 1, 2), (5, 1, 2), (5, 1, 4), (7, 1, 3), (13, 1, 3), (3, 2, 2), (3, 2, 4)];

fn field_of(i: usize) -> Field {
    let (p, m) = FIELDS[i % FIELDS.len()];
    Field::new(p, m, None).unwrap()
}

fn ring_of(i: usize) -> Ring {
    let (p, m, e) = RINGS[i % RINGS.len()];
    Ring::new(&Field::new(p, m, None).unwrap(), e).unwrap()
}

fn elem(field: &Field, raw: u32) -> Gf {
    field.from_index(raw % field.q()).unwrap()
}

fn poly(field: &Field, raw: &[u32]) -> Poly {
    Poly::from_coeffs(field, raw.iter().map(|&r| elem(field, r)).collect())
}

fn ring_elem(ring: &Ring, raw: &[u32]) -> RingElement {
    let c: Vec<Gf> = (0..ring.e()).map(|j| elem(ring.field(), raw[j % raw.len()].wrapping_add(j as u32 * 7))).collect();
    ring.element(&c).unwrap()
}

fn ring_vec(ring: &Ring, raw: &[u32], n: usize) -> Vec<RingElement> {
    (0..n).map(|t| ring_elem(ring, &raw[t * ring.e() % raw.len()..])).collect()
}

fn code(field: &Field, raw: &[u32], k: usize, n: usize) -> LinearCode {
    let rows = (0..k).map(|i| (0..n).map(|j| elem(field, raw[(i * n + j) % raw.len()] ^ (i * 31 + j) as u32)).collect());
    LinearCode::new(field, n, rows.collect()).unwrap()
}

/// Rank as the largest order of a nonzero minor, by cofactor expansion.
fn rank_by_minors(field: &Field, rows: &[Vec<Gf>]) -> usize {
    fn det(field: &Field, m: &[Vec<Gf>]) -> Gf {
        if m.len() == 1 {
            return m[0][0];
        }
        let mut acc = Gf::ZERO;
        for c in 0..m.len() {
            let minor: Vec<Vec<Gf>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
            let term = field.mul(m[0][c], det(field, &minor));
            acc = if c % 2 == 0 { field.add(acc, term) } else { field.sub(acc, term) };
        }
        acc
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    let ncols = rows.first().map_or(0, |r| r.len());
    for k in (1..=rows.len().min(ncols)).rev() {
        for rs in subsets(rows.len(), k) {
            for cs in subsets(ncols, k) {
                let m: Vec<Vec<Gf>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                if !det(field, &m).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_is_additive(fi in 0usize..7, a in any::<u32>(), b in any::<u32>()) {
        let f = field_of(fi);
        let (a, b) = (elem(&f, a), elem(&f, b));
        let p = f.p() as u64;
        prop_assert_eq!(f.pow_u(f.add(a, b), p), f.add(f.pow_u(a, p), f.pow_u(b, p)));
        prop_assert_eq!(f.pow_u(a, f.q() as u64), a);
    }

    #[test]
    fn inverse_routes_agree(fi in 0usize..7, a in 1u32..1000) {
        let f = field_of(fi);
        let a = elem(&f, a);
        prop_assert_eq!(f.inv(a), f.inv_euclid(a));
        if let Some(i) = f.inv(a) {
            prop_assert_eq!(f.mul(a, i), f.one());
        }
    }

    #[test]
    fn bezout_identity(fi in 0usize..7, a in prop::collection::vec(any::<u32>(), 1..7), b in prop::collection::vec(any::<u32>(), 1..7)) {
        let f = field_of(fi);
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, s, t) = a.xgcd(&b).unwrap();
        prop_assert_eq!(&(&(&s * &a) + &(&t * &b)), &g);
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn division_identity(fi in 0usize..7, a in prop::collection::vec(any::<u32>(), 1..9), b in prop::collection::vec(any::<u32>(), 1..5)) {
        let f = field_of(fi);
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&(&q * &b) + &r), &a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn reciprocal_is_involution(fi in 0usize..7, a in prop::collection::vec(any::<u32>(), 1..7)) {
        let f = field_of(fi);
        let mut a = poly(&f, &a);
        prop_assume!(!a.is_zero());
        if a.coeff(0).is_zero() {
            a = &a + &Poly::one(&f);
        }
        prop_assume!(!a.coeff(0).is_zero());
        prop_assert_eq!(a.reciprocal().poly.reciprocal().poly, a);
    }

    #[test]
    fn factorization_multiplies_back(fi in 0usize..7, a in prop::collection::vec(any::<u32>(), 2..8)) {
        let f = field_of(fi);
        let a = poly(&f, &a);
        prop_assume!(a.deg() >= 1);
        let fac = factor(&a).unwrap();
        prop_assert_eq!(fac.product(), a.clone());
        let squarefree = a.gcd(&a.derivative()).is_one();
        prop_assert_eq!(fac.is_squarefree(), squarefree);
    }

    #[test]
    fn crt_is_a_ring_isomorphism(ri in 0usize..7, a in prop::collection::vec(any::<u32>(), 4), b in prop::collection::vec(any::<u32>(), 4)) {
        let ring = ring_of(ri);
        let f = ring.field();
        let (a, b) = (ring_elem(&ring, &a), ring_elem(&ring, &b));
        let (da, db) = (a.decompose(), b.decompose());
        let prod: Vec<Gf> = da.iter().zip(&db).map(|(&x, &y)| f.mul(x, y)).collect();
        let sum: Vec<Gf> = da.iter().zip(&db).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!((&a * &b).decompose(), prod);
        prop_assert_eq!((&a + &b).decompose(), sum);
        prop_assert_eq!(ring.compose(&da).unwrap(), a.clone());
        prop_assert_eq!(a.is_unit(), da.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn gray_map_is_linear_isometry(ri in 0usize..7, n in 1usize..4, x in prop::collection::vec(any::<u32>(), 12), y in prop::collection::vec(any::<u32>(), 12), c in any::<u32>()) {
        let ring = ring_of(ri);
        let f = ring.field();
        let m = GrayMatrix::find(&ring, None).unwrap();
        let (x, y) = (ring_vec(&ring, &x, n), ring_vec(&ring, &y, n));
        let c = elem(f, c);
        let gx = m.gray(&x).unwrap();
        let gy = m.gray(&y).unwrap();
        let sum: Vec<RingElement> = x.iter().zip(&y).map(|(a, b)| a + &b.scale(c)).collect();
        let want: Vec<Gf> = gx.iter().zip(&gy).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect();
        prop_assert_eq!(m.gray(&sum).unwrap(), want);
        prop_assert_eq!(m.ungray(&gx).unwrap(), x.clone());
        // the Euclidean inner product scales by gamma
        let ip = x.iter().zip(&y).fold(ring.zero(), |acc, (a, b)| &acc + &(a * b));
        let lhs = matrix::dot(f, &gx, &gy);
        let rhs = f.mul(m.gamma(), ip.decompose().into_iter().fold(Gf::ZERO, |a, b| f.add(a, b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_is_an_involution(fi in 0usize..7, n in 1usize..8, k in 1usize..5, raw in prop::collection::vec(any::<u32>(), 40)) {
        let f = field_of(fi);
        let c = code(&f, &raw, k.min(n), n);
        let d = c.dual();
        prop_assert_eq!(c.k() + d.k(), n);
        prop_assert_eq!(d.dual(), c.clone());
        for r in c.generator() {
            for s in d.generator() {
                prop_assert!(matrix::dot(&f, r, s).is_zero());
            }
        }
    }

    #[test]
    fn rank_matches_minors(fi in 0usize..7, rows in 1usize..4, cols in 1usize..5, raw in prop::collection::vec(0u32..4, 16)) {
        let f = field_of(fi);
        let m: Vec<Vec<Gf>> = (0..rows).map(|i| (0..cols).map(|j| elem(&f, raw[i * cols + j])).collect()).collect();
        prop_assert_eq!(matrix::rank(&f, &m), rank_by_minors(&f, &m));
    }

    #[test]
    fn hull_matches_intersection(fi in 0usize..4, n in 2usize..8, k in 1usize..5, raw in prop::collection::vec(any::<u32>(), 40)) {
        let f = field_of(fi);
        let c = code(&f, &raw, k.min(n), n);
        prop_assert_eq!(c.hull_dim(), c.intersection(&c.dual()).unwrap().k());
    }

    #[test]
    fn distance_routes_agree(fi in 0usize..4, n in 2usize..9, k in 1usize..5, raw in prop::collection::vec(any::<u32>(), 40)) {
        let f = field_of(fi);
        let c = code(&f, &raw, k.min(n - 1), n);
        let direct = c.weight_distribution(u128::MAX).unwrap();
        let via_dual = c.dual().weight_distribution(u128::MAX).unwrap().macwilliams(f.q(), n - c.k()).unwrap();
        prop_assert_eq!(&direct, &via_dual);
        let d = direct.min_distance();
        prop_assert_eq!(c.min_distance_direct(u128::MAX).unwrap(), d);
        if let Some(d) = d {
            prop_assert!(c.singleton_defect(d) >= 0);
        }
    }

    #[test]
    fn ring_dual_transfers_to_gray_image(ri in 0usize..7, n in 1usize..4, raw in prop::collection::vec(any::<u32>(), 12)) {
        let ring = ring_of(ri);
        let m = GrayMatrix::find(&ring, None).unwrap();
        let c = RingLinearCode::new(&ring, n, &[ring_vec(&ring, &raw, n)]).unwrap();
        prop_assert_eq!(c.dual().gray_image(&m).unwrap(), c.gray_image(&m).unwrap().dual());
    }
}
