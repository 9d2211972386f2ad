//! Acceptance gate: every criterion prints one pass/fail line, then the
//! target exits nonzero if any criterion failed. Runs without the libtest
//! harness so the lines always reach the output.

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use cegis_lab::harness::{
    demo_gold, demo_lemma1, demo_lemma2, demo_rectangle, demo_theorem1, Lemma2Config,
    SeparationReport, Theorem1Config,
};
use cegis_lab::prelude::*;
use cegis_lab::verifiers::difference;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;
type Demo = fn() -> cegis_lab::Result<SeparationReport>;

const THEOREM1_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_PAIRS: usize = 200;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn checks_pass(report: &SeparationReport) -> Result<(), String> {
    for c in &report.checks {
        ensure(c.passed, format!("{}: {}", c.name, c.detail))?;
    }
    Ok(())
}

fn criterion_theorem1() -> Outcome {
    let config = Theorem1Config::default();
    ensure(
        config.chain_targets == (0..=20).collect::<Vec<_>>(),
        "chain matrix",
    )?;
    ensure(config.seeds.len() == 3, "three seeds")?;
    ensure(
        config.rect_targets.contains(&RectBounds::new(-1, 1, -1, 1)),
        "unit square missing",
    )?;
    let within_8 = config.rect_targets.iter().filter(|r| {
        [r.x_lo, r.x_hi, r.y_lo, r.y_hi]
            .iter()
            .all(|v| v.abs() <= 8)
    });
    ensure(within_8.count() >= 11, "ten random rectangles within ±8")?;

    let start = Instant::now();
    let report = demo_theorem1(&config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let triples = 3 * (21 + config.rect_targets.len());
    ensure(
        report.pairs.len() == triples,
        format!("{} pairs", report.pairs.len()),
    )?;
    for p in &report.pairs {
        ensure(
            p.equal_final && p.status_match,
            format!("mismatch at {}", p.label),
        )?;
    }
    ensure(elapsed < THEOREM1_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{triples}/{triples} triples agree in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn criterion_lemma1() -> Outcome {
    let report = demo_lemma1(20, None).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 42, "42 rows")?;
    for row in &report.rows {
        let i: usize = row.target.trim_start_matches("L_").parse().unwrap();
        match row.engine.as_str() {
            "cegis" => ensure(
                row.queries == i + 2 && row.semantic_match && row.status == "converged",
                format!(
                    "cegis on {}: {} queries, {}",
                    row.target, row.queries, row.status
                ),
            )?,
            _ => ensure(
                row.counterexamples == 0 && row.status == "stalled",
                format!(
                    "hcegis on {}: {} cex, {}",
                    row.target, row.counterexamples, row.status
                ),
            )?,
        }
    }
    checks_pass(&report)?;
    Ok("21 exact cegis identifications, 21 hcegis stalls with 0 counterexamples".into())
}

fn criterion_lemma2_positive() -> Outcome {
    let config = Lemma2Config::default();
    ensure(config.fin_instances.len() == 10, "ten finite instances")?;
    for inst in &config.fin_instances {
        ensure(inst.len() <= 8, "instance too large")?;
        for &(j, n) in inst {
            ensure(pair_encode(j, n).unwrap() <= 500, "code above 500")?;
        }
    }
    ensure(
        config.diag_targets == (1..=10).collect::<Vec<_>>(),
        "diag targets",
    )?;
    let report = demo_lemma2(&config).map_err(|e| e.to_string())?;
    let hcegis: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.engine == "hcegis")
        .collect();
    ensure(hcegis.len() == 20, format!("{} hcegis rows", hcegis.len()))?;
    for r in &hcegis {
        ensure(
            r.semantic_match && r.status == "converged",
            format!("{}: {}", r.target, r.status),
        )?;
    }
    Ok("20/20 instances identified by hcegis".into())
}

fn criterion_lemma2_negative() -> Outcome {
    let report = demo_lemma2(&Lemma2Config::default()).map_err(|e| e.to_string())?;
    let mut fooled = 0;
    for p in report.pairs.iter().filter(|p| p.logs_identical.is_some()) {
        let (l, r) = (
            &report.rows[p.left.unwrap()],
            &report.rows[p.right.unwrap()],
        );
        ensure(
            p.logs_identical == Some(true),
            format!("logs differ: {}", p.label),
        )?;
        ensure(l.log_sha256 == r.log_sha256, "digests differ")?;
        ensure(!(l.semantic_match && r.semantic_match), "both finals match")?;
        fooled += 1;
    }
    ensure(fooled >= 5, format!("only {fooled} compared pairs"))?;
    Ok(format!("{fooled} crafted pairs with byte-identical logs"))
}

// Independent pairing oracle: a table built by walking diagonals.
fn cantor_table(limit: u64) -> HashMap<u64, (u64, u64)> {
    let mut table = HashMap::new();
    let mut code = 0;
    for s in 0.. {
        for b in 0..=s {
            if code > limit {
                return table;
            }
            table.insert(code, (s - b, b));
            code += 1;
        }
    }
    unreachable!()
}

struct Oracle {
    family: Family,
    decoded: HashMap<u64, (u64, u64)>,
    bound: u64,
}

impl Oracle {
    fn new(family: Family) -> Self {
        let bound = family.universe_bound();
        Oracle {
            family,
            decoded: cantor_table(bound),
            bound,
        }
    }

    fn point(&self, code: u64) -> (i64, i64) {
        let (a, b) = self.decoded[&code];
        let un = |n: u64| {
            if n.is_multiple_of(2) {
                (n / 2) as i64
            } else {
                -((n + 1) as i64) / 2
            }
        };
        (un(a), un(b))
    }

    fn member(&self, index: &Index, n: u64) -> bool {
        match index {
            Index::Chain(i) => n <= *i,
            Index::Rect(r) => {
                let (x, y) = self.point(n);
                r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi
            }
            Index::Diag(i) => {
                let (j, m) = self.decoded[&n];
                j == 0 && m >= *i
            }
            Index::Finite(s) => s.contains(&n),
            Index::Gold(GoldVariant::Full) => true,
            Index::Gold(GoldVariant::Minus(i)) => n != *i,
        }
    }

    fn diff(&self, cand: &Index, target: &Index) -> Vec<u64> {
        (0..=self.bound)
            .filter(|&n| self.member(cand, n) && !self.member(target, n))
            .collect()
    }

    fn minimum(&self, diff: &[u64]) -> Option<u64> {
        match self.family {
            Family::Rectangle(_) => diff.iter().copied().min_by_key(|&c| {
                let (x, y) = self.point(c);
                (x * x + y * y, x, y)
            }),
            _ => diff.first().copied(),
        }
    }

    fn random_index(&self, rng: &mut ChaCha8Rng) -> Index {
        match self.family {
            Family::Chain(f) => Index::Chain(rng.gen_range(0..=f.max_index())),
            Family::Rectangle(_) => {
                let mut corner = || {
                    let a = rng.gen_range(-12..=12);
                    let b = rng.gen_range(a..=12);
                    (a, b)
                };
                let ((x_lo, x_hi), (y_lo, y_hi)) = (corner(), corner());
                Index::Rect(RectBounds::new(x_lo, x_hi, y_lo, y_hi))
            }
            Family::Diagonal(_) => {
                if rng.gen_bool(0.5) {
                    Index::Diag(rng.gen_range(0..=30))
                } else {
                    let size = rng.gen_range(1..=8);
                    Index::finite((0..size).map(|_| rng.gen_range(0..=self.bound)))
                }
            }
            Family::Gold(g) => {
                if rng.gen_ratio(1, 5) {
                    Index::Gold(GoldVariant::Full)
                } else {
                    Index::Gold(GoldVariant::Minus(rng.gen_range(0..=g.universe_bound())))
                }
            }
        }
    }
}

fn criterion_verifiers() -> Outcome {
    let families = [
        Family::Chain(ChainFamily::default()),
        Family::Rectangle(RectangleFamily::default()),
        Family::Diagonal(DiagonalFamily::default()),
        Family::Gold(GoldFamily::default()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for family in families {
        let oracle = Oracle::new(family);
        for _ in 0..ORACLE_PAIRS {
            let (ci, ti) = (oracle.random_index(&mut rng), oracle.random_index(&mut rng));
            let (cand, target) = (family.language(&ci).unwrap(), family.language(&ti).unwrap());
            let diff = oracle.diff(&ci, &ti);
            let tag = format!("{} {ci} vs {ti}", family.name());
            ensure(
                difference(&cand, &target).unwrap() == diff,
                format!("diff {tag}"),
            )?;

            let min = mincheck(&cand, &target).unwrap().cex();
            ensure(min == oracle.minimum(&diff), format!("mincheck {tag}"))?;

            let any = check(&cand, &target, &CexStrategy::SeededRandom(rng.gen())).unwrap();
            ensure(
                any.cex().is_none() == diff.is_empty(),
                format!("check ⊥ {tag}"),
            )?;
            if let Some(e) = any.cex() {
                ensure(diff.contains(&e), format!("unsound check {tag}"))?;
            }

            let history: Vec<TraceEntry> = (0..rng.gen_range(0..6))
                .map(|_| match rng.gen_ratio(1, 4) {
                    true => TraceEntry::Blank,
                    false => TraceEntry::Value(rng.gen_range(0..=oracle.bound)),
                })
                .collect();
            let ceiling = history.iter().filter_map(|e| e.value()).max();
            let h = hcheck(&cand, &target, &history).unwrap().cex();
            let expected = ceiling.and_then(|c| diff.iter().copied().find(|&m| m < c));
            ensure(h == expected, format!("hcheck {tag}"))?;
            if let (Some(m), Some(c)) = (h, ceiling) {
                ensure(m < c, format!("hcheck above history {tag}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} pairs, {ORACLE_PAIRS} per family, all agree"
    ))
}

fn criterion_pairing() -> Outcome {
    let formula = |a: u64, b: u64| (a + b) * (a + b + 1) / 2 + b;
    let mut seen = BTreeSet::new();
    for code in 0..=10_000u64 {
        let (a, b) = pair_decode(code);
        ensure(pair_encode(a, b) == Ok(code), format!("round trip {code}"))?;
        ensure(formula(a, b) == code, format!("formula at {code}"))?;
        ensure(seen.insert((a, b)), format!("duplicate preimage at {code}"))?;
    }
    for a in 0..=100 {
        for b in 0..=100 {
            let c = pair_encode(a, b).unwrap();
            ensure(
                pair_encode(a + 1, b).unwrap() > c,
                format!("not increasing in a at ({a},{b})"),
            )?;
            ensure(
                pair_encode(a, b + 1).unwrap() > c,
                format!("not increasing in b at ({a},{b})"),
            )?;
        }
    }
    for a in 0..=1000 {
        ensure(
            pair_encode(a, 0).unwrap() >= a,
            format!("pair({a},0) < {a}"),
        )?;
    }
    Ok("bijective on 0..=10^4, monotone on 0..=100, pair(a,0) >= a".into())
}

fn criterion_rectangle() -> Outcome {
    let report = demo_rectangle(None).map_err(|e| e.to_string())?;
    checks_pass(&report)?;
    // Brute force: radial minimum of grid \ unit square.
    let family = RectangleFamily::default();
    let first = family
        .grid_points()
        .filter(|&(x, y)| x.abs() > 1 || y.abs() > 1)
        .min_by_key(|&(x, y)| (x * x + y * y, x, y))
        .unwrap();
    ensure(first == (-2, 0), format!("brute-force minimum {first:?}"))?;
    ensure(
        [(0, 2), (0, -2), (2, 0), (-2, 0)].contains(&first),
        "minimum not on the radius-2 ring",
    )?;
    let row = &report.rows[0];
    ensure(
        row.final_program == "rect[-1,1]x[-1,1]" && row.semantic_match,
        format!("final {}", row.final_program),
    )?;
    Ok(format!(
        "first minimal counterexample (-2,0), radial key 4; {}",
        row.final_program
    ))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn criterion_replay() -> Outcome {
    let runs: [(&str, Demo); 5] = [
        ("theorem1", || demo_theorem1(&Theorem1Config::default())),
        ("lemma1", || demo_lemma1(20, None)),
        ("lemma2", || demo_lemma2(&Lemma2Config::default())),
        ("rectangle", || demo_rectangle(None)),
        ("gold", || demo_gold(None)),
    ];
    for (name, demo) in runs {
        let first = demo().map_err(|e| e.to_string())?.to_jsonl();
        let second = demo().map_err(|e| e.to_string())?.to_jsonl();
        ensure(first == second, format!("{name} differs between runs"))?;
        let path = golden_dir().join(format!("{name}.jsonl"));
        let golden =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(
            first == golden,
            format!("{name} differs from {}", path.display()),
        )?;
    }
    Ok("5 demos byte-identical across reruns and against golden logs".into())
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 minimal/simulated equivalence", criterion_theorem1),
        ("2 chain separation", criterion_lemma1),
        (
            "3 history-bounded identification",
            criterion_lemma2_positive,
        ),
        ("4 indistinguishable pairs", criterion_lemma2_negative),
        ("5 verifier oracles", criterion_verifiers),
        ("6 pairing", criterion_pairing),
        ("7 rectangle", criterion_rectangle),
        ("8 replay determinism", criterion_replay),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
