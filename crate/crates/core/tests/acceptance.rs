//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringcodes::lcd_search::divisors_of_xn_minus_1;
use ringcodes::linear_code::DEFAULT_BUDGET;
use ringcodes::tables::{code_fixtures, replay, Status, Table};
use ringcodes::{Field, Gf, GrayMatrix, LinearCode, Poly, Ring, RingCyclicCode, RingLinearCode, RingPoly};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

/// Odd prime powers up to 49 as (p, m).
fn odd_prime_powers() -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut m = 1;
        while p.pow(m) <= 49 {
            out.push((p, m));
            m += 1;
        }
    }
    out
}

fn c1_idempotents() -> Outcome {
    let rows = replay(Table::TabA, DEFAULT_BUDGET);
    let bad: Vec<String> = rows.iter().filter(|r| r.status != Status::Pass).map(|r| r.to_string()).collect();
    if !bad.is_empty() {
        return fail(bad.join("; "));
    }
    // components read off mu_i agree with evaluation at the roots
    for (q, e) in [(7, 3), (13, 3), (5, 4), (13, 4), (17, 4)] {
        let ring = Ring::new(&Field::prime(q).unwrap(), e).unwrap();
        for r in ring.elements().step_by(97) {
            if r.decompose() != r.decompose_via_idempotents() {
                return fail(format!("decomposition routes disagree for {r} over q={q}"));
            }
        }
    }
    pass(format!("{} decompositions match", rows.len()))
}

fn c2_orthogonal_idempotents() -> Outcome {
    let mut rings = 0;
    for (p, m) in odd_prime_powers() {
        let field = Field::new(p, m, None).unwrap();
        let q = field.q() as usize;
        for e in (2..=6).filter(|e| (q - 1).is_multiple_of(*e)) {
            let ring = Ring::new(&field, e).unwrap();
            let mus: Vec<_> = (0..e).map(|i| ring.mu(i)).collect();
            let sum = mus.iter().fold(ring.zero(), |acc, mu| &acc + mu);
            if sum != ring.one() {
                return fail(format!("sum of mu_i != 1 for q={q} e={e}"));
            }
            for (i, a) in mus.iter().enumerate() {
                for (j, b) in mus.iter().enumerate() {
                    let want = if i == j { a.clone() } else { ring.zero() };
                    if (a * b) != want {
                        return fail(format!("mu_{} mu_{} wrong for q={q} e={e}", i + 1, j + 1));
                    }
                }
            }
            rings += 1;
        }
    }
    pass(format!("{rings} rings with e in 2..=6, q <= 49"))
}

fn table_criterion(table: Table, disputed_rows: &[usize]) -> Outcome {
    let rows = replay(table, DEFAULT_BUDGET);
    let mut problems = Vec::new();
    for r in &rows {
        let want = if disputed_rows.contains(&r.row) { Status::Disputed } else { Status::Pass };
        if r.status != want {
            problems.push(format!("row {}: {} ({})", r.row, r.status, r.problems.join(", ")));
        }
    }
    let n_pass = rows.iter().filter(|r| r.status == Status::Pass).count();
    let disputed: Vec<String> = rows
        .iter()
        .filter(|r| r.status == Status::Disputed)
        .map(|r| format!("row {} printed {} computed {}", r.row, r.printed, r.computed))
        .collect();
    let summary = format!("{}/{} exact", n_pass, rows.len())
        + &if disputed.is_empty() { String::new() } else { format!(", DISPUTED: {}", disputed.join("; ")) };
    if problems.is_empty() {
        pass(summary)
    } else {
        fail(format!("{summary}; {}", problems.join("; ")))
    }
}

fn c6_duality_transfer() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let choices: Vec<(u64, u32, usize)> =
        vec![(3, 1, 2), (5, 1, 2), (7, 1, 2), (3, 2, 2), (11, 1, 2), (13, 1, 2), (7, 1, 3), (13, 1, 3)];
    let mut gray = std::collections::HashMap::new();
    for i in 0..200 {
        let (p, m, e) = choices[rng.gen_range(0..choices.len())];
        let field = Field::new(p, m, None).unwrap();
        let ring = Ring::new(&field, e).unwrap();
        let mat = gray.entry((p, m, e)).or_insert_with(|| GrayMatrix::find(&ring, None).unwrap()).clone();
        let n = rng.gen_range(1..=8);
        let count = rng.gen_range(1..=3);
        let c = RingLinearCode::random(&ring, n, count, &mut rng).unwrap();
        let lhs = c.dual().gray_image(&mat).unwrap();
        let rhs = c.gray_image(&mat).unwrap().dual();
        if lhs != rhs {
            return fail(format!("code {i}: q={} e={e} n={n}", field.q()));
        }
    }
    pass("200 random codes, e <= 3, q <= 13, n <= 8")
}

/// Every pair of divisors of x^n - 1 over F_5 with the component criteria
/// compared against the Gray-image hull.
fn lcd_space(n: usize) -> Result<(usize, usize, usize), String> {
    let field = Field::prime(5).unwrap();
    let ring = Ring::new(&field, 2).unwrap();
    let m = GrayMatrix::parse(&ring, "1,-1;1,1", false).unwrap();
    let divisors = divisors_of_xn_minus_1(&field, n, 10_000).unwrap();
    let (mut pairs, mut lcd, mut self_reciprocal_rejected) = (0, 0, 0);
    for g1 in &divisors {
        for g2 in &divisors {
            let code = RingCyclicCode::build(&ring, n, &[g1.clone(), g2.clone()]).unwrap();
            let by_components = code.is_lcd();
            let by_hull = code.gray_image_with(&m).unwrap().hull_dim() == 0;
            if by_components != by_hull {
                return Err(format!("n={n} g=({g1}, {g2}): components say {by_components}, hull says {by_hull}"));
            }
            pairs += 1;
            lcd += by_hull as usize;
            let both_sr = g1.is_self_reciprocal().unwrap() && g2.is_self_reciprocal().unwrap();
            self_reciprocal_rejected += (both_sr && !by_hull) as usize;
        }
    }
    Ok((pairs, lcd, self_reciprocal_rejected))
}

fn c7_lcd_equivalence() -> Outcome {
    let six = match lcd_space(6) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let ten = match lcd_space(10) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    if six.0 != 256 || ten.0 != 1296 {
        return fail(format!("unexpected search sizes {} and {}", six.0, ten.0));
    }
    if ten.2 == 0 {
        return fail("n=10 space never exercised the multiplicity condition");
    }
    pass(format!(
        "n=6: {}/{} LCD; n=10: {}/{} LCD, {} self-reciprocal pairs rejected by multiplicity",
        six.1, six.0, ten.1, ten.0, ten.2
    ))
}

fn c8_macwilliams() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let fields = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)];
    let mut done = 0;
    while done < 100 {
        let (p, m) = fields[rng.gen_range(0..fields.len())];
        let field = Field::new(p, m, None).unwrap();
        let q = field.q() as f64;
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..n);
        if q.powi(k as i32) > 1e5 || q.powi((n - k) as i32) > 1e5 {
            continue;
        }
        let rows: Vec<Vec<Gf>> = (0..k)
            .map(|_| (0..n).map(|_| field.from_index(rng.gen_range(0..field.q())).unwrap()).collect())
            .collect();
        let c = LinearCode::new(&field, n, rows).unwrap();
        let direct = c.weight_distribution(DEFAULT_BUDGET).unwrap();
        let dual = c.dual();
        let via_dual = dual.weight_distribution(DEFAULT_BUDGET).unwrap().macwilliams(field.q(), dual.k()).unwrap();
        if direct != via_dual {
            return fail(format!("q={} n={n} k={}", field.q(), c.k()));
        }
        done += 1;
    }
    pass("100 random codes with q^k, q^(n-k) <= 1e5")
}

fn c9_free() -> Outcome {
    let mut checked = 0;
    for (q, e, n) in [(5u64, 2usize, 6usize), (5, 2, 10), (7, 3, 3), (7, 2, 3), (13, 3, 3)] {
        let field = Field::prime(q).unwrap();
        let ring = Ring::new(&field, e).unwrap();
        let divisors = divisors_of_xn_minus_1(&field, n, 10_000).unwrap();
        let total = divisors.len().pow(e as u32);
        for idx in 0..total {
            let mut rest = idx;
            let comps: Vec<Poly> = (0..e)
                .map(|_| {
                    let g = divisors[rest % divisors.len()].clone();
                    rest /= divisors.len();
                    g
                })
                .collect();
            let code = RingCyclicCode::build(&ring, n, &comps).unwrap();
            let equal_degrees = comps.windows(2).all(|w| w[0].deg() == w[1].deg());
            // freeness measured on the R-span of the shifts of the single ring generator
            let g = code.ring_generator();
            let shifts: Vec<_> = (0..n)
                .map(|j| {
                    let mut v = vec![ring.zero(); n];
                    for (t, c) in g.coeffs().iter().enumerate() {
                        let slot = &mut v[(t + j) % n];
                        *slot = &*slot + c;
                    }
                    v
                })
                .collect();
            let module = RingLinearCode::new(&ring, n, &shifts).unwrap();
            if module.fq_dim() != code.k() {
                return fail(format!("q={q} n={n} {comps:?}: <g(x)> has dim {} not {}", module.fq_dim(), code.k()));
            }
            if code.is_free() != equal_degrees || module.is_free() != equal_degrees {
                return fail(format!("q={q} n={n} {comps:?}: freeness disagrees with degrees"));
            }
            if g.lead().is_unit() != equal_degrees {
                return fail(format!("q={q} n={n} {comps:?}: leading coefficient unit status wrong"));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} codes"))
}

fn c10_generator_identity() -> Outcome {
    let mut checked = 0;
    for table in [Table::Tab1, Table::Tab2, Table::Tab3, Table::Examples] {
        for fx in code_fixtures(table) {
            let code = fx.build().unwrap();
            let product = &code.ring_generator() * &code.ring_check_polynomial();
            if product != RingPoly::xn_minus_1(code.ring(), code.n()) {
                return fail(format!("{} row {}", fx.table, fx.row));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} fixtures"))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 idempotent decompositions", Duration::from_secs(1), c1_idempotents),
        ("2 orthogonal idempotent systems", Duration::from_secs(5), c2_orthogonal_idempotents),
        ("3 tab1 parameters", Duration::from_secs(120), || table_criterion(Table::Tab1, &[13])),
        ("4 tab2 parameters and MDS", Duration::from_secs(30), || table_criterion(Table::Tab2, &[6])),
        ("5 tab3 parameters, LCD two ways, non-free", Duration::from_secs(120), || table_criterion(Table::Tab3, &[])),
        ("6 duality transfer under the Gray map", Duration::from_secs(60), c6_duality_transfer),
        ("7 LCD criteria versus Gray-image hull", Duration::from_secs(120), c7_lcd_equivalence),
        ("8 MacWilliams versus direct enumeration", Duration::from_secs(60), c8_macwilliams),
        ("9 free iff equal component degrees", Duration::from_secs(30), c9_free),
        ("10 generator identity g h = x^n - 1", Duration::from_secs(10), c10_generator_identity),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = outcome.ok && in_time;
        failed += !ok as usize;
        let timing = if in_time {
            format!("{:.2}s", elapsed.as_secs_f64())
        } else {
            format!("{:.2}s over the {}s limit", elapsed.as_secs_f64(), limit.as_secs())
        };
        println!("{} criterion {name}: {} ({timing})", if ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
