//! Verb implementations.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use ringcodes::codespec::{Coeff, CodeSpec, RootOrderSpec};
use ringcodes::lcd_search::{self, SearchSpec};
use ringcodes::linear_code::WeightDistribution;
use ringcodes::poly::{factor_with_seed, factor_xn_minus_1_with_seed};
use ringcodes::tables::{self, RowReport, Status, Table};
use ringcodes::{Error, Field, GrayMatrix, Poly, Ring, RingCyclicCode, RootOrder};

use crate::{Cli, CodeArgs, Command, FieldArgs, Failure, Format, Global, RootOrderArg};

type Outcome = Result<u8, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Factor { field, n, poly } => factor(g, field, *n, poly.as_deref()),
        Command::Idempotents { field, e, root_order } => idempotents(g, field, *e, *root_order),
        Command::Build(code) => build(g, code),
        Command::Gray { code, gamma } => gray(g, code, gamma.as_deref()),
        Command::Distance(code) => distance(g, code),
        Command::Check(code) => check(g, code),
        Command::Search {
            field,
            e,
            n,
            n_min,
            n_max,
            gray_matrix,
            allow_any_gamma,
            lcd,
            non_free,
            min_k,
            min_d,
            max_combinations,
            top,
        } => {
            let p = field.p.ok_or_else(|| usage("--p is required"))?;
            if field.modulus.is_some() {
                return Err(usage("search uses the built-in modulus; --modulus is not supported here"));
            }
            let (lo, hi) = match (n, n_min, n_max) {
                (Some(n), None, None) => (*n, *n),
                (None, Some(lo), Some(hi)) => (*lo, *hi),
                (None, Some(lo), None) => (*lo, *lo),
                _ => return Err(usage("give either --n or --n-min [--n-max]")),
            };
            let mut spec = SearchSpec::new(p, field.m, *e, lo);
            spec.n_max = hi;
            spec.gray_matrix = gray_matrix.clone();
            spec.allow_any_gamma = *allow_any_gamma;
            spec.lcd_only = *lcd;
            spec.non_free_only = *non_free;
            spec.min_k = *min_k;
            spec.min_d = *min_d;
            spec.max_combinations = *max_combinations;
            spec.distance_budget = g.budget;
            search(g, &spec, *top)
        }
        Command::Tables { which } => tables(g, which),
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// JSON when requested, or when writing to a `.json` file.
fn wants_json(g: &Global) -> bool {
    g.format == Format::Json || g.out.as_deref().and_then(Path::extension).is_some_and(|x| x == "json")
}

fn emit(g: &Global, text: &str, value: &Value) -> Result<(), Failure> {
    let body = if wants_json(g) {
        serde_json::to_string_pretty(value).expect("values serialize") + "\n"
    } else {
        text.to_string()
    };
    match &g.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn coeff(token: &str) -> Coeff {
    match token.trim().parse::<i64>() {
        Ok(v) => Coeff::Int(v),
        Err(_) => Coeff::Text(token.trim().to_string()),
    }
}

/// `"1,4;1,3,0,2,4"` into coefficient rows; parentheses around a row are ignored.
fn rows(s: &str) -> Result<Vec<Vec<Coeff>>, Failure> {
    s.split(';')
        .map(|row| {
            let row = row.trim().trim_start_matches('(').trim_end_matches(')');
            let items: Vec<Coeff> = row.split(',').filter(|t| !t.trim().is_empty()).map(coeff).collect();
            if items.is_empty() {
                Err(usage(format!("empty row in {s:?}")))
            } else {
                Ok(items)
            }
        })
        .collect()
}

fn modulus(args: &FieldArgs) -> Result<Option<Vec<i64>>, Failure> {
    args.modulus
        .as_deref()
        .map(|s| {
            s.trim_matches(|c| c == '(' || c == ')')
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("bad modulus coefficient {t:?}"))))
                .collect()
        })
        .transpose()
}

fn field(args: &FieldArgs) -> Result<Field, Failure> {
    let p = args.p.ok_or_else(|| usage("--p is required"))?;
    Ok(Field::new(p, args.m, modulus(args)?.as_deref())?)
}

/// Without a flag: ascending roots for e = 2, ascending factor constants for e >= 3.
fn root_order(arg: Option<RootOrderArg>, e: usize) -> RootOrder {
    match arg {
        Some(RootOrderArg::Canonical) => RootOrder::Canonical,
        Some(RootOrderArg::FactorConstant) => RootOrder::FactorConstant,
        None if e >= 3 => RootOrder::FactorConstant,
        None => RootOrder::Canonical,
    }
}

/// Reads a spec file, accepting either a bare spec or the `build` output that wraps one.
fn load_spec(path: &Path) -> Result<CodeSpec, Failure> {
    if !path.is_file() {
        return Err(usage(format!("spec file {} not found", path.display())));
    }
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))?;
    let inner = value.get("spec").cloned().unwrap_or(value);
    Ok(serde_json::from_value(inner).map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))?)
}

fn code_spec(args: &CodeArgs) -> Result<CodeSpec, Failure> {
    let mut spec = match &args.spec {
        Some(path) => load_spec(path)?,
        None => {
            let missing: Vec<&str> = [
                ("--p", args.field.p.is_none()),
                ("--e", args.e.is_none()),
                ("--n", args.n.is_none()),
                ("--g", args.g.is_none()),
            ]
            .into_iter()
            .filter_map(|(name, absent)| absent.then_some(name))
            .collect();
            if !missing.is_empty() {
                return Err(usage(format!("missing {} (or give --spec)", missing.join(", "))));
            }
            CodeSpec {
                p: args.field.p.unwrap(),
                m: args.field.m,
                e: args.e.unwrap(),
                n: args.n.unwrap(),
                g: rows(args.g.as_deref().unwrap())?,
                gray_matrix: None,
                label: None,
                modulus: modulus(&args.field)?,
                root_order: (root_order(None, args.e.unwrap()) == RootOrder::FactorConstant)
                    .then_some(RootOrderSpec::FactorConstant),
                allow_any_gamma: false,
            }
        }
    };
    if let Some(m) = &args.gray_matrix {
        spec.gray_matrix = Some(rows(m)?);
    }
    if args.allow_any_gamma {
        spec.allow_any_gamma = true;
    }
    if let Some(order) = args.root_order {
        spec.root_order = match order {
            RootOrderArg::Canonical => None,
            RootOrderArg::FactorConstant => Some(RootOrderSpec::FactorConstant),
        };
    }
    if args.label.is_some() {
        spec.label = args.label.clone();
    }
    Ok(spec)
}

/// The code with a Gray matrix attached, searching for one when the spec has none.
fn code_with_gray(spec: &CodeSpec) -> Result<RingCyclicCode, Failure> {
    let code = spec.build()?;
    if code.gray_matrix().is_some() {
        return Ok(code);
    }
    let m = GrayMatrix::find(code.ring(), None)?;
    Ok(code.with_gray_matrix(m)?)
}

fn factor(g: &Global, args: &FieldArgs, n: Option<usize>, poly: Option<&str>) -> Outcome {
    let f = field(args)?;
    let (target, fac) = match (n, poly) {
        (Some(n), None) => {
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            (Poly::xn_minus_1(&f, n), factor_xn_minus_1_with_seed(&f, n, g.seed))
        }
        (None, Some(s)) => {
            let p = Poly::parse(&f, s)?;
            let fac = factor_with_seed(&p, g.seed)?;
            (p, fac)
        }
        _ => return Err(usage("give exactly one of --n or --poly")),
    };
    let text = format!(
        "{} = {}\nirreducible factors: {}, monic divisors: {}\n",
        target.to_expression(),
        fac,
        fac.factors.len(),
        fac.divisor_count()
    );
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(p, m)| json!({ "factor": p.to_string(), "expression": p.to_expression(), "multiplicity": m }))
        .collect();
    let value = json!({
        "q": f.q(),
        "poly": target.to_string(),
        "unit": f.format(fac.unit),
        "factors": factors,
        "divisor_count": fac.divisor_count().to_string(),
    });
    emit(g, &text, &value)?;
    Ok(0)
}

fn idempotents(g: &Global, args: &FieldArgs, e: usize, order: Option<RootOrderArg>) -> Outcome {
    let f = field(args)?;
    let ring = Ring::with_order(&f, e, root_order(order, e))?;
    let sys = ring.idempotents();
    let mut text = String::new();
    let mut items = Vec::new();
    for (i, mu) in sys.mus.iter().enumerate() {
        let alpha = f.format(ring.roots()[i]);
        writeln!(text, "mu_{} = {}    (alpha_{} = {alpha})", i + 1, mu.expression_in('u'), i + 1).unwrap();
        items.push(json!({
            "index": i + 1,
            "alpha": alpha,
            "mu": mu.expression_in('u'),
            "coefficients": mu.to_string(),
        }));
    }
    emit(g, &text, &json!({ "q": f.q(), "e": e, "idempotents": items }))?;
    Ok(0)
}

/// Ring-level facts shared by `build` and `check`.
#[derive(Serialize)]
struct Classification {
    n: usize,
    fq_dimension: usize,
    size: String,
    component_degrees: Vec<usize>,
    ring_generator: String,
    generator_identity: bool,
    free: bool,
    lcd: bool,
    lcd_certificate: String,
    self_dual: bool,
}

fn classify(code: &RingCyclicCode) -> Classification {
    Classification {
        n: code.n(),
        fq_dimension: code.k(),
        size: code.size().to_string(),
        component_degrees: code.comps().iter().map(Poly::deg).collect(),
        ring_generator: code.ring_generator().to_string(),
        generator_identity: code.generator_identity_holds(),
        free: code.is_free(),
        lcd: code.is_lcd(),
        lcd_certificate: code.lcd_certificate().to_string(),
        self_dual: code.is_self_dual(),
    }
}

fn classification_text(c: &Classification) -> String {
    let mut out = String::new();
    writeln!(out, "length {} over R, F_q-dimension {}, size {}", c.n, c.fq_dimension, c.size).unwrap();
    writeln!(out, "component degrees {:?}", c.component_degrees).unwrap();
    writeln!(out, "g(x) = {}", c.ring_generator).unwrap();
    writeln!(out, "free: {}  lcd: {}  self-dual: {}", c.free, c.lcd, c.self_dual).unwrap();
    writeln!(out, "{}", c.lcd_certificate).unwrap();
    out
}

fn build(g: &Global, args: &CodeArgs) -> Outcome {
    let spec = code_spec(args)?;
    let code = spec.build()?;
    let class = classify(&code);
    let text = classification_text(&class);
    emit(g, &text, &json!({ "spec": to_value(&spec), "classification": to_value(&class) }))?;
    Ok(0)
}

fn gray(g: &Global, args: &CodeArgs, gamma: Option<&str>) -> Outcome {
    if args.spec.is_none() && args.g.is_none() {
        let f = field(&args.field)?;
        let e = args.e.ok_or_else(|| usage("--e is required"))?;
        let ring = Ring::with_order(&f, e, root_order(args.root_order, e))?;
        let gamma = gamma.map(|s| f.parse(s)).transpose()?;
        let m = GrayMatrix::find(&ring, gamma)?;
        let text = format!("M = {m}\ngamma = {}\n", f.format(m.gamma()));
        emit(g, &text, &json!({ "gray_matrix": m.to_string(), "gamma": f.format(m.gamma()) }))?;
        return Ok(0);
    }
    if gamma.is_some() {
        return Err(usage("--gamma applies only when searching for a matrix"));
    }
    let code = code_with_gray(&code_spec(args)?)?;
    let m = code.gray_matrix().expect("attached");
    let f = code.ring().field();
    let image = code.gray_image()?;
    let generator: Vec<Vec<Coeff>> =
        image.generator().iter().map(|r| r.iter().map(|&a| Coeff::of(f, a)).collect()).collect();
    let mut text = format!("M = {m}  gamma = {}\nGray image: length {}, dimension {}\n", f.format(m.gamma()), image.n(), image.k());
    for row in &generator {
        let cells: Vec<String> = row.iter().map(Coeff::to_string).collect();
        writeln!(text, "{}", cells.join(" ")).unwrap();
    }
    let value = json!({
        "gray_matrix": m.to_string(),
        "gamma": f.format(m.gamma()),
        "n": image.n(),
        "k": image.k(),
        "generator": generator,
    });
    emit(g, &text, &value)?;
    Ok(0)
}

fn sparse_json(w: &WeightDistribution) -> Value {
    let map = w
        .sparse()
        .into_iter()
        .map(|(weight, count)| {
            let v = u64::try_from(&count).map_or_else(|_| Value::String(count.to_string()), Value::from);
            (weight.to_string(), v)
        })
        .collect();
    Value::Object(map)
}

fn distance(g: &Global, args: &CodeArgs) -> Outcome {
    let code = code_with_gray(&code_spec(args)?)?;
    let q = code.ring().field().q();
    let image = code.gray_image()?;
    let report = image.min_distance(g.budget)?;
    let params = match report.d {
        Some(d) => format!("[{},{},{d}]_{q}", image.n(), image.k()),
        None => format!("[{},0]_{q}", image.n()),
    };
    let mut text = format!("{params}  via {}\nweights:", report.method);
    for (w, c) in report.distribution.sparse() {
        write!(text, " {w}:{c}").unwrap();
    }
    text.push('\n');
    let value = json!({
        "params": params,
        "n": image.n(),
        "k": image.k(),
        "d": report.d,
        "method": to_value(&report.method),
        "gray_matrix": code.gray_matrix().map(ToString::to_string),
        "weight_distribution": sparse_json(&report.distribution),
    });
    emit(g, &text, &value)?;
    Ok(0)
}

fn check(g: &Global, args: &CodeArgs) -> Outcome {
    let code = code_with_gray(&code_spec(args)?)?;
    let class = classify(&code);
    let result = lcd_search::evaluate(&code, code.gray_matrix().expect("attached"), g.budget)?;
    let mut text = result.params.to_string();
    let mut tags = vec![if result.free { "free" } else { "non-free" }];
    if result.lcd {
        tags.push("lcd");
    }
    if result.self_dual {
        tags.push("self-dual");
    }
    if result.mds {
        tags.push("mds");
    }
    write!(text, "  [{}]", tags.join(",")).unwrap();
    if let Some(r) = &result.optimal_ref {
        write!(text, "  {r}").unwrap();
    }
    writeln!(text, "\nGray image hull dimension {}", result.hull_dim).unwrap();
    text.push_str(&classification_text(&class));
    emit(g, &text, &json!({ "classification": to_value(&class), "result": to_value(&result) }))?;
    Ok(0)
}

fn search(g: &Global, spec: &SearchSpec, top: usize) -> Outcome {
    let outcome = lcd_search::search(spec)?;
    let mut text = String::new();
    for r in outcome.results.iter().take(top) {
        let comps: Vec<String> =
            r.spec.g.iter().map(|c| format!("({})", c.iter().map(Coeff::to_string).collect::<Vec<_>>().join(","))).collect();
        let mut tags = vec![if r.free { "free" } else { "non-free" }];
        if r.lcd {
            tags.push("lcd");
        }
        if r.mds {
            tags.push("mds");
        }
        let reference = r.optimal_ref.as_deref().unwrap_or("");
        writeln!(text, "{:<16} [{}] {}  {reference}", r.params, tags.join(","), comps.join(" ")).unwrap();
    }
    writeln!(
        text,
        "{} results from {} combinations{}",
        outcome.results.len(),
        outcome.examined,
        if outcome.truncated { " (truncated)" } else { "" }
    )
    .unwrap();
    if outcome.truncated && wants_json(g) {
        eprintln!("warning: search truncated after {} combinations", outcome.examined);
    }
    emit(g, &text, &to_value(&outcome.results))?;
    Ok(0)
}

fn tables(g: &Global, which: &str) -> Outcome {
    let selected: Vec<Table> = if which.eq_ignore_ascii_case("all") {
        Table::ALL.to_vec()
    } else {
        which
            .split(',')
            .map(|s| s.trim().parse::<Table>().map_err(|_| usage(format!("unknown table {s:?}"))))
            .collect::<Result<_, _>>()?
    };
    let rows: Vec<RowReport> = selected.iter().flat_map(|&t| tables::replay(t, g.budget)).collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let (pass, disputed, fail) = (count(Status::Pass), count(Status::Disputed), count(Status::Fail));
    let mut text = String::new();
    for r in &rows {
        writeln!(text, "{r}").unwrap();
    }
    writeln!(text, "{} rows: {pass} PASS, {disputed} DISPUTED, {fail} FAIL", rows.len()).unwrap();
    emit(g, &text, &to_value(&rows))?;
    Ok(if fail > 0 { 1 } else { 0 })
}
