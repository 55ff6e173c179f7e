//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use tempfile::TempDir;

use common::gen::{uml_complete_vdm, valid_uml};
use common::{check_backward, check_forward, fixtures, golden_pairs};
use vdmuml::cli::{cmd_check, cmd_vdm2uml, EXIT_FAILURE, EXIT_OK};
use vdmuml::model::{BasicType, Config, VdmModel, VdmType};
use vdmuml::transform::{abstract_type, is_abstracted};
use vdmuml::vdm::render_type;
use vdmuml::{parse_puml, parse_vdm, print_puml, print_vdm, uml_to_vdm, vdm_to_uml};

const GOLDEN_PAIRS: usize = 15;
const GOLDEN_TIME_LIMIT: Duration = Duration::from_secs(1);
const GENERATED_MODELS: u64 = 500;
const ROUNDTRIP_TIME_LIMIT: Duration = Duration::from_secs(30);
const VALID_PUML: usize = 20;
const INVALID_PUML: usize = 10;
const DETERMINISM_RUNS: usize = 3;
const SEED: u64 = 0x5eed_f00d;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn vdm_text(m: &VdmModel) -> String {
    print_vdm(m)
        .into_iter()
        .map(|(_, t)| t)
        .collect::<Vec<_>>()
        .join("\n\n")
}

fn golden_suite() -> Outcome {
    let start = Instant::now();
    let pairs = golden_pairs();
    let mut failed = Vec::new();
    for pair in &pairs {
        if let Err(e) = check_forward(pair).and_then(|_| check_backward(pair)) {
            failed.push(format!("{}: {e}", pair.name));
        }
    }
    let elapsed = start.elapsed();
    let passed = pairs.len() - failed.len();
    outcome(
        failed.is_empty() && pairs.len() == GOLDEN_PAIRS && elapsed < GOLDEN_TIME_LIMIT,
        format!(
            "{passed}/{GOLDEN_PAIRS} pairs in {elapsed:.2?} (limit {GOLDEN_TIME_LIMIT:?}) {}",
            failed.join("; ")
        ),
    )
}

/// Returns (fixed point failures, closure failures).
fn roundtrip_suite() -> (Outcome, usize) {
    let start = Instant::now();
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut fixed, mut closure) = (0u64, 0usize);
    for _ in 0..GENERATED_MODELS {
        let m = uml_complete_vdm(&mut rng, &cfg);
        let uml = vdm_to_uml(&m, &cfg);
        let text = print_puml(&uml, &cfg);
        match parse_puml(&text) {
            Ok(u) if u.canonicalize() == uml.canonicalize() => {}
            _ => closure += 1,
        }
        let canonical = m.canonicalize();
        match parse_vdm(&vdm_text(&canonical), "gen") {
            Ok(v) if v.canonicalize() == canonical => {}
            _ => closure += 1,
        }
        let back = parse_puml(&text).ok().and_then(|u| uml_to_vdm(&u).ok());
        if back.map(|b| b.canonicalize()) == Some(canonical) {
            fixed += 1;
        }
    }
    let elapsed = start.elapsed();
    (
        outcome(
            fixed == GENERATED_MODELS && elapsed < ROUNDTRIP_TIME_LIMIT,
            format!("{fixed}/{GENERATED_MODELS} models in {elapsed:.2?} (limit {ROUNDTRIP_TIME_LIMIT:?})"),
        ),
        closure,
    )
}

fn idempotence_suite() -> (Outcome, usize) {
    let cfg = Config::with_capacities(u32::MAX / 4, u32::MAX / 4);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let (mut same, mut closure) = (0u64, 0usize);
    for _ in 0..GENERATED_MODELS {
        let u = valid_uml(&mut rng);
        match parse_puml(&print_puml(&u, &cfg)) {
            Ok(p) if p.canonicalize() == u.canonicalize() => {}
            _ => closure += 1,
        }
        let Ok(vdm) = uml_to_vdm(&u) else { continue };
        let Ok(reparsed) = parse_vdm(&vdm_text(&vdm), "gen") else {
            closure += 1;
            continue;
        };
        if reparsed.canonicalize() != vdm.canonicalize() {
            closure += 1;
        }
        if vdm_to_uml(&reparsed, &cfg) == u {
            same += 1;
        }
    }
    (
        outcome(
            same == GENERATED_MODELS,
            format!("{same}/{GENERATED_MODELS} diagrams"),
        ),
        closure,
    )
}

// Independent reference for the abstraction arithmetic.

fn node_count(t: &VdmType) -> u64 {
    let mut n = 0;
    let mut stack: Vec<&VdmType> = vec![t];
    while let Some(x) = stack.pop() {
        if !matches!(x, VdmType::Basic(_) | VdmType::Unit) {
            n += 1;
        }
        stack.extend(x.children());
    }
    n - 1
}

fn oracle_capacity(t: &VdmType, g0: u64, g1: u64) -> Option<u64> {
    match t {
        VdmType::Map { .. } => Some(g0 + g0),
        VdmType::Product(_) | VdmType::Union(_) => Some(g1),
        VdmType::Basic(_) | VdmType::Named(_) | VdmType::Unit => None,
        _ => Some(g0),
    }
}

fn oracle_marker(t: &VdmType) -> String {
    match t {
        VdmType::Set(_) | VdmType::Set1(_) => "set...".into(),
        VdmType::Seq(_) | VdmType::Seq1(_) => "seq...".into(),
        VdmType::Optional(_) => "[...]".into(),
        VdmType::Map { .. } => "map...".into(),
        VdmType::Product(ts) => vec!["*"; ts.len() - 1].concat(),
        VdmType::Union(ts) => vec!["|"; ts.len() - 1].concat(),
        other => render_type(other),
    }
}

fn oracle_abstract(t: &VdmType) -> String {
    match t {
        VdmType::Set(i) => format!("set of {}", oracle_marker(i)),
        VdmType::Set1(i) => format!("set1 of {}", oracle_marker(i)),
        VdmType::Seq(i) => format!("seq of {}", oracle_marker(i)),
        VdmType::Seq1(i) => format!("seq1 of {}", oracle_marker(i)),
        VdmType::Optional(i) => format!("[{}]", oracle_marker(i)),
        VdmType::Map {
            domain,
            range,
            injective,
        } => format!(
            "{} {} to {}",
            if *injective { "inmap" } else { "map" },
            oracle_marker(domain),
            oracle_marker(range)
        ),
        other => oracle_marker(other),
    }
}

/// Every tree with at most three levels (a leaf is one level), binary
/// products and unions, over two basic types and two class names.
fn all_types() -> Vec<VdmType> {
    let leaves = vec![
        VdmType::Basic(BasicType::Nat),
        VdmType::Basic(BasicType::Bool),
        VdmType::named("A"),
        VdmType::named("B"),
    ];
    let mut level = leaves.clone();
    for _ in 1..3 {
        let mut next = leaves.clone();
        for t in &level {
            next.push(VdmType::set(t.clone()));
            next.push(VdmType::set1(t.clone()));
            next.push(VdmType::seq(t.clone()));
            next.push(VdmType::seq1(t.clone()));
            next.push(VdmType::optional(t.clone()));
        }
        for a in &level {
            for b in &level {
                next.push(VdmType::map(a.clone(), b.clone(), false));
                next.push(VdmType::map(a.clone(), b.clone(), true));
                next.push(VdmType::Product(vec![a.clone(), b.clone()]));
                next.push(VdmType::Union(vec![a.clone(), b.clone()]));
            }
        }
        level = next;
    }
    level
}

fn abstraction_arithmetic() -> Outcome {
    let mut checked = 0u64;
    let mut bad = Vec::new();

    let g1 = Config::with_capacities(2, 1);
    for n in 2..=6 {
        let members: Vec<VdmType> = (0..n).map(|i| VdmType::named(format!("T{i}"))).collect();
        for (t, sym) in [
            (VdmType::Product(members.clone()), '*'),
            (VdmType::Union(members), '|'),
        ] {
            let out = abstract_type(&t, &g1);
            checked += 1;
            if out.len() != n - 1 || out.chars().any(|c| c != sym) {
                bad.push(format!("n={n}: {out}"));
            }
        }
    }

    let types = all_types();
    for t in &types {
        for g0 in 0..=4u32 {
            for g1 in 0..=3u32 {
                let cfg = Config::with_capacities(g0, g1);
                let out = abstract_type(t, &cfg);
                let expected = match oracle_capacity(t, u64::from(g0), u64::from(g1)) {
                    Some(cap) if node_count(t) > cap => oracle_abstract(t),
                    _ => render_type(t),
                };
                let map_threshold_holds = !matches!(t, VdmType::Map { .. })
                    || is_abstracted(t, &cfg) == (node_count(t) > 2 * u64::from(g0));
                checked += 1;
                if out != expected || !map_threshold_holds {
                    bad.push(format!(
                        "{} at ({g0},{g1}): got {out}, want {expected}",
                        render_type(t)
                    ));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} of {checked} cases over {} enumerated types {}",
            checked - bad.len() as u64,
            types.len(),
            bad.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
        ),
    )
}

fn grammar_corpus() -> Outcome {
    let line_re = |d: &str, f: &str| {
        let Some(rest) = d.strip_prefix(f).and_then(|r| r.strip_prefix(':')) else {
            return false;
        };
        let mut parts = rest.splitn(3, ':');
        let line = parts.next().and_then(|l| l.parse::<usize>().ok());
        let col = parts.next().and_then(|c| c.parse::<usize>().ok());
        line.is_some_and(|l| l >= 1)
            && col.is_some()
            && parts.next().is_some_and(|m| m.starts_with(" error: "))
    };
    let mut correct = 0;
    let mut total = 0;
    let mut wrong = Vec::new();
    for (dir, valid) in [("valid", true), ("invalid", false)] {
        let mut files: Vec<_> = fs::read_dir(fixtures().join("puml").join(dir))
            .unwrap()
            .map(|e| e.unwrap().path())
            .collect();
        files.sort();
        for f in files {
            total += 1;
            let r = cmd_check(&f);
            let name = f.display().to_string();
            let ok = if valid {
                r.exit_code == EXIT_OK && !r.has_errors()
            } else {
                r.exit_code == EXIT_FAILURE
                    && r.has_errors()
                    && r.diagnostics
                        .iter()
                        .filter(|d| d.contains(": error: "))
                        .all(|d| line_re(d, &name))
            };
            if ok {
                correct += 1;
            } else {
                wrong.push(f.file_name().unwrap().to_string_lossy().into_owned());
            }
        }
    }
    outcome(
        correct == total && total == VALID_PUML + INVALID_PUML,
        format!(
            "{correct}/{} files classified {}",
            VALID_PUML + INVALID_PUML,
            wrong.join(", ")
        ),
    )
}

fn determinism() -> Outcome {
    let tmp = TempDir::new().unwrap();
    let ws = tmp.path().join("ws");
    fs::create_dir(&ws).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let model = uml_complete_vdm(&mut rng, &Config::default());
    for (name, text) in print_vdm(&model) {
        fs::write(ws.join(format!("{name}.vdmpp")), text).unwrap();
    }
    for pair in golden_pairs().iter().filter(|p| p.name == "qualified_seq") {
        fs::write(
            ws.join("extra.vdmpp"),
            pair.vdm.replace('A', "Q").replace('B', "R"),
        )
        .unwrap();
    }
    let cfg = Config::default();
    let mut hashes = Vec::new();
    for i in 0..DETERMINISM_RUNS {
        let out = tmp.path().join(format!("run{i}.puml"));
        let r = cmd_vdm2uml(std::slice::from_ref(&ws), Some(&out), &cfg);
        if r.exit_code != EXIT_OK {
            return outcome(false, format!("run {i} failed: {:?}", r.diagnostics));
        }
        let digest = Sha256::digest(fs::read(&out).unwrap());
        hashes.push(
            digest
                .iter()
                .map(|b| format!("{b:02x}"))
                .collect::<String>(),
        );
    }
    let same = hashes.windows(2).all(|w| w[0] == w[1]);
    outcome(
        same,
        format!("{DETERMINISM_RUNS} runs, sha256 {}", &hashes[0][..16]),
    )
}

fn main() -> ExitCode {
    let c1 = golden_suite();
    let (c2, closure_a) = roundtrip_suite();
    let (c3, closure_b) = idempotence_suite();
    let c4 = abstraction_arithmetic();
    let c5 = grammar_corpus();
    let c6 = determinism();
    let c7 = outcome(
        closure_a + closure_b == 0,
        format!(
            "{} printer outputs rejected across suites 2 and 3",
            closure_a + closure_b
        ),
    );
    let results = [
        ("1 golden translation pairs", c1),
        ("2 round-trip fixed point", c2),
        ("3 UML-side idempotence", c3),
        ("4 abstraction arithmetic", c4),
        ("5 grammar conformance", c5),
        ("6 determinism", c6),
        ("7 print/parse closure", c7),
    ];
    let mut all = true;
    for (name, o) in &results {
        all &= o.pass;
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail.trim_end()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
