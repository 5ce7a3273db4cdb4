//! Command-line front end for the engine: computes diamonds and twisted
//! cohomology, derives classes through the registered relations, runs the
//! Schubert oracles, and aggregates the verification suites.
//!
//! Subcommands:
//!
//! ```text
//! twisted k n j i                cohomology of Ω^j on Gr(k,n), twisted by O(−i)
//! grass k n                      Hodge diamond of Gr(k,n)
//! section k n [--cy j,lev] [--vanishing]
//!                                diamond of the hyperplane section
//! derive {T2_10|P1_10|Y1|Y2|W|IGr_3_8}
//!                                classes obtained from the projection/jump relations
//! schubert {class|degree|index|numbers} n
//! verify {table1|collections|lemma-van|coble-fiber|counts|hodge-jump k n}
//! ```
//!
//! Global flags: `--format {json|csv|md}` (default `json`), `--jobs N`,
//! `--out FILE`. Exit codes: 0 on success, 1 on verification failure, 2 on
//! invalid input. Every number is serialized as a decimal string; identical
//! inputs produce byte-identical output regardless of `--jobs`.

use std::fs;
use std::io::Write;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use hodgebott::collections::{
    coble_fiber_check, lemma_van_check, verify_collection, CollectionName,
};
use hodgebott::hodge::HodgePolynomial;
use hodgebott::motive::{
    class_of, count_exceptional, hodge_jump_identity_check, solve_relation, DiagramNode,
    MotiveClass, RelationName, VarietyName,
};
use hodgebott::partitions::binomial;
use hodgebott::schubert::{
    degree_closed_formula, degree_oracle, fundamental_class_t2, index_check,
    lemma_numbers_closed, lemma_numbers_oracle, IndexWitness, RangePolicy,
};
use hodgebott::sections::{cy_type, Section};
use hodgebott::twisted::{grassmannian_diamond, twisted_form_cohomology};
use hodgebott::Error as EngineError;

/// One named check with its outcome.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: String,
    pub details: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { "ok".into() } else { "fail".into() },
            details: details.into(),
        }
    }
}

/// Structured result of a subcommand. Hodge entries are `(p, q, h)` with
/// `h` a decimal string; for cohomology tables `p` is the form degree and
/// `q` the cohomological degree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub variety: String,
    pub dimension: u64,
    pub hodge: Vec<(u64, u64, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    fn verification_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Md,
}

struct Options {
    format: Format,
    jobs: usize,
    out: Option<String>,
}

enum CliError {
    Usage(String),
    Engine(EngineError),
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage() -> String {
    "usage: hodgebott <command> [args] [--format json|csv|md] [--jobs N] [--out FILE]\n\
     commands:\n\
     \x20 twisted k n j i\n\
     \x20 grass k n\n\
     \x20 section k n [--cy j,level] [--vanishing]\n\
     \x20 derive {T2_10|P1_10|Y1|Y2|W|IGr_3_8}\n\
     \x20 schubert {class|degree|index|numbers} n\n\
     \x20 verify {table1|collections|lemma-van|coble-fiber|counts|hodge-jump k n}\n"
        .into()
}

fn parse_num<T: core::str::FromStr>(s: &str, what: &str) -> CliResult<T> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("invalid {what}: {s}")))
}

fn diamond_rows(d: &HodgePolynomial) -> Vec<(u64, u64, String)> {
    d.iter()
        .map(|((p, q), h)| (p as u64, q as u64, h.to_string()))
        .collect()
}

fn class_report(class: MotiveClass) -> Report {
    let variety = class.label().unwrap_or("class").to_string();
    Report {
        variety,
        dimension: class.dim() as u64,
        hodge: diamond_rows(class.poly()),
        checks: Vec::new(),
    }
}

/// Runs jobs with bounded worker threads, preserving input order.
fn run_jobs<T: Send>(jobs: usize, tasks: Vec<Box<dyn FnOnce() -> T + Send>>) -> Vec<T> {
    if jobs <= 1 || tasks.len() <= 1 {
        return tasks.into_iter().map(|t| t()).collect();
    }
    let mut slots: Vec<Option<T>> = Vec::new();
    slots.resize_with(tasks.len(), || None);
    let indexed: Vec<(usize, Box<dyn FnOnce() -> T + Send>)> =
        tasks.into_iter().enumerate().collect();
    let chunk = indexed.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        let mut rest = indexed;
        while !rest.is_empty() {
            let take = chunk.min(rest.len());
            let batch: Vec<_> = rest.drain(..take).collect();
            handles.push(scope.spawn(move || {
                batch
                    .into_iter()
                    .map(|(i, t)| (i, t()))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            for (i, v) in h.join().expect("worker panicked") {
                slots[i] = Some(v);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("slot filled")).collect()
}

fn cmd_twisted(args: &[String]) -> CliResult<Report> {
    if args.len() != 4 {
        return Err(CliError::Usage("twisted needs k n j i".into()));
    }
    let k: usize = parse_num(&args[0], "k")?;
    let n: usize = parse_num(&args[1], "n")?;
    let j: usize = parse_num(&args[2], "j")?;
    let i: i64 = parse_num(&args[3], "i")?;
    let table = twisted_form_cohomology(k, n, j, i)?;
    let hodge = table
        .entries()
        .map(|(q, dim)| (j as u64, q as u64, dim.to_string()))
        .collect();
    Ok(Report {
        variety: format!("Omega^{j}_Gr({k},{n})(-{i})"),
        dimension: (k * (n - k)) as u64,
        hodge,
        checks: Vec::new(),
    })
}

fn cmd_grass(args: &[String]) -> CliResult<Report> {
    if args.len() != 2 {
        return Err(CliError::Usage("grass needs k n".into()));
    }
    let k: usize = parse_num(&args[0], "k")?;
    let n: usize = parse_num(&args[1], "n")?;
    let d = grassmannian_diamond(k, n)?;
    Ok(Report {
        variety: format!("Gr({k},{n})"),
        dimension: d.dim() as u64,
        hodge: diamond_rows(&d),
        checks: Vec::new(),
    })
}

fn cmd_section(args: &[String]) -> CliResult<Report> {
    if args.len() < 2 {
        return Err(CliError::Usage("section needs k n".into()));
    }
    let k: usize = parse_num(&args[0], "k")?;
    let n: usize = parse_num(&args[1], "n")?;
    let mut cy: Option<(usize, usize)> = None;
    let mut vanishing = false;
    let mut rest = &args[2..];
    while let Some(flag) = rest.first() {
        match flag.as_str() {
            "--cy" => {
                let value = rest
                    .get(1)
                    .ok_or_else(|| CliError::Usage("--cy needs j,level".into()))?;
                let (j, level) = value
                    .split_once(',')
                    .ok_or_else(|| CliError::Usage("--cy needs j,level".into()))?;
                cy = Some((parse_num(j, "cy weight")?, parse_num(level, "cy level")?));
                rest = &rest[2..];
            }
            "--vanishing" => {
                vanishing = true;
                rest = &rest[1..];
            }
            other => return Err(CliError::Usage(format!("unknown section flag {other}"))),
        }
    }

    let section = Section::compute(k, n)?;
    let d = section.dim();
    let mut checks = Vec::new();
    if let Some((j, level)) = cy {
        let result = cy_type(section.diamond(), j, level)?;
        checks.push(Check::new(
            format!("cy_type(j={j},k={level})"),
            true,
            result.to_string(),
        ));
    }
    let (variety, hodge) = if vanishing {
        let rows = (0..=d)
            .filter_map(|q| {
                let v = section.vanishing_middle(q);
                if v == BigUint::ZERO {
                    None
                } else {
                    Some((q as u64, (d - q) as u64, v.to_string()))
                }
            })
            .collect();
        (format!("T({k},{n}) vanishing middle"), rows)
    } else {
        (format!("T({k},{n})"), diamond_rows(section.diamond()))
    };
    Ok(Report {
        variety,
        dimension: d as u64,
        hodge,
        checks,
    })
}

fn cmd_derive(args: &[String]) -> CliResult<Report> {
    if args.len() != 1 {
        return Err(CliError::Usage(
            "derive needs one of T2_10 P1_10 Y1 Y2 W IGr_3_8".into(),
        ));
    }
    let class = match args[0].as_str() {
        "T2_10" => solve_relation(RelationName::CongruenceT210)?,
        "P1_10" => solve_relation(RelationName::PeskineP110)?,
        "Y1" => solve_relation(RelationName::SectionY1)?,
        "Y2" => solve_relation(RelationName::SectionY2)?,
        "W" => solve_relation(RelationName::CongruenceW)?,
        "IGr_3_8" => class_of(VarietyName::Isotropic(3, 8))?,
        other => return Err(CliError::Usage(format!("unknown derive target {other}"))),
    };
    Ok(class_report(class))
}

fn cmd_schubert(args: &[String]) -> CliResult<Report> {
    if args.len() != 2 {
        return Err(CliError::Usage(
            "schubert needs {class|degree|index|numbers} n".into(),
        ));
    }
    let n: usize = parse_num(&args[1], "n")?;
    match args[0].as_str() {
        "class" => {
            let class = fundamental_class_t2(n)?;
            let hodge = class
                .iter()
                .map(|((a, b), c)| (a as u64, b as u64, c.to_string()))
                .collect();
            Ok(Report {
                variety: format!("[T(2,{n})] in the Schubert basis"),
                dimension: (n - 2) as u64,
                hodge,
                checks: Vec::new(),
            })
        }
        "degree" => {
            let oracle = degree_oracle(n)?;
            let printed = degree_closed_formula(n, RangePolicy::AsPrinted)?;
            let restricted = degree_closed_formula(n, RangePolicy::Restricted)?;
            let checks = vec![
                Check::new("degree_oracle", true, oracle.to_string()),
                Check::new("closed_formula_as_printed", true, printed.to_string()),
                Check::new("closed_formula_restricted", true, restricted.to_string()),
                Check::new(
                    "closed_formula_delta",
                    true,
                    format!(
                        "printed - oracle = {}, restricted - oracle = {}",
                        &printed - &oracle,
                        &restricted - &oracle
                    ),
                ),
            ];
            Ok(Report {
                variety: format!("deg T(2,{n})"),
                dimension: (n - 2) as u64,
                hodge: Vec::new(),
                checks,
            })
        }
        "index" => {
            let report = index_check(n)?;
            let witnesses = report
                .witnesses
                .iter()
                .map(|w| match w {
                    IndexWitness::DegreeNotDivisible { modulus, degree } => {
                        format!("{modulus}^{} does not divide deg = {degree}", n - 2)
                    }
                    IndexWitness::PairingNotDivisible {
                        modulus,
                        lambda,
                        value,
                    } => format!(
                        "{modulus} does not divide h·σ_({},{})·[T] = {value}",
                        lambda.0, lambda.1
                    ),
                })
                .collect::<Vec<_>>()
                .join("; ");
            Ok(Report {
                variety: format!("index of T(2,{n})"),
                dimension: (n - 2) as u64,
                hodge: Vec::new(),
                checks: vec![Check::new("index_is_3", report.index_is_3, witnesses)],
            })
        }
        "numbers" => {
            let (a, b) = lemma_numbers_oracle(n)?;
            let (ca, cb) = lemma_numbers_closed(n);
            let checks = vec![
                Check::new("a_oracle", true, a.to_string()),
                Check::new("b_oracle", true, b.to_string()),
                Check::new(
                    "a_closed_delta",
                    true,
                    format!("closed = {ca}, delta = {}", &ca - &a),
                ),
                Check::new(
                    "b_closed_delta",
                    true,
                    format!("closed = {cb}, delta = {}", &cb - &b),
                ),
            ];
            Ok(Report {
                variety: format!("intersection numbers on T(2,{n})"),
                dimension: (n - 2) as u64,
                hodge: Vec::new(),
                checks,
            })
        }
        other => Err(CliError::Usage(format!("unknown schubert mode {other}"))),
    }
}

fn frozen_column(d: &HodgePolynomial, expect: &[(usize, usize, u64)]) -> bool {
    let mut want = HodgePolynomial::new(d.dim());
    for &(p, q, h) in expect {
        if want.set(p, q, BigUint::from(h)).is_err() {
            return false;
        }
    }
    &want == d
}

fn table1_checks() -> CliResult<Vec<Check>> {
    // Frozen Hodge columns of the five varieties.
    let mut checks = Vec::new();

    let y = Section::compute(3, 10)?;
    let y_expect: Vec<(usize, usize, u64)> = {
        let diag = [1u64, 1, 2, 3, 4, 5, 7, 8, 9, 10];
        let mut v = Vec::new();
        for (p, h) in diag.iter().enumerate() {
            v.push((p, p, *h));
            if p != 20 - p {
                v.push((20 - p, 20 - p, *h));
            }
        }
        v.push((9, 11, 1));
        v.push((10, 10, 30));
        v.push((11, 9, 1));
        v
    };
    checks.push(Check::new(
        "section(3,10) = column Y",
        frozen_column(y.diamond(), &y_expect),
        "diagonal 1,1,2,3,4,5,7,8,9,10; middle 1,30,1",
    ));

    let t = solve_relation(RelationName::CongruenceT210)?;
    let t_expect = vec![
        (0usize, 0usize, 1u64),
        (1, 1, 1),
        (2, 2, 2),
        (2, 4, 1),
        (4, 2, 1),
        (3, 3, 22),
        (3, 5, 1),
        (5, 3, 1),
        (4, 4, 23),
        (4, 6, 1),
        (6, 4, 1),
        (5, 5, 22),
        (6, 6, 2),
        (7, 7, 1),
        (8, 8, 1),
    ];
    checks.push(Check::new(
        "derive T2_10 = column T",
        frozen_column(t.poly(), &t_expect),
        "1,1,2; 1,22,1; 1,23,1",
    ));

    let p = solve_relation(RelationName::PeskineP110)?;
    let p_expect = vec![
        (0usize, 0usize, 1u64),
        (1, 1, 1),
        (1, 3, 1),
        (3, 1, 1),
        (2, 2, 22),
        (2, 4, 1),
        (4, 2, 1),
        (3, 3, 22),
        (3, 5, 1),
        (5, 3, 1),
        (4, 4, 22),
        (5, 5, 1),
        (6, 6, 1),
    ];
    checks.push(Check::new(
        "derive P1_10 = column P",
        frozen_column(p.poly(), &p_expect),
        "1,1; 1,22,1; 1,22,1",
    ));

    let y1 = solve_relation(RelationName::SectionY1)?;
    let y1_expect: Vec<(usize, usize, u64)> = {
        let diag = [1u64, 1, 2, 3, 4, 5, 6];
        let mut v = Vec::new();
        for (p, h) in diag.iter().enumerate() {
            v.push((p, p, *h));
            v.push((14 - p, 14 - p, *h));
        }
        v.push((6, 8, 1));
        v.push((8, 6, 1));
        v.push((7, 7, 26));
        v
    };
    checks.push(Check::new(
        "derive Y1 = column Y1",
        frozen_column(y1.poly(), &y1_expect),
        "1,1,2,3,4,5,6; 1,26,1",
    ));

    let y2 = solve_relation(RelationName::SectionY2)?;
    let y2_expect: Vec<(usize, usize, u64)> = {
        let diag = [1u64, 1, 2, 6];
        let mut v = Vec::new();
        for (p, h) in diag.iter().enumerate() {
            v.push((p, p, *h));
            v.push((8 - p, 8 - p, *h));
        }
        v.push((3, 5, 1));
        v.push((5, 3, 1));
        v.push((4, 4, 26));
        v
    };
    checks.push(Check::new(
        "derive Y2 = column Y2",
        frozen_column(y2.poly(), &y2_expect),
        "1,1,2,6; 1,26,1",
    ));

    Ok(checks)
}

fn counts_checks() -> CliResult<Vec<Check>> {
    let expect = |name: &str, node: DiagramNode, want: u64| -> CliResult<Check> {
        let got = count_exceptional(node)?;
        Ok(Check::new(
            name,
            got == BigUint::from(want),
            format!("{got} (expected {want})"),
        ))
    };
    let mut checks = vec![
        expect(
            "section collection on Gr(3,10)",
            DiagramNode::SectionCollection { k: 3, n: 10 },
            108,
        )?,
        expect("blow-up along I(2,9)", DiagramNode::DvBlowupAlongI29, 300)?,
        expect(
            "projection to Gr(3,9)",
            DiagramNode::DvProjectionToGr39,
            252,
        )?,
        expect("blow-up along I2(2,8)", DiagramNode::Y1BlowupAlongI228, 66)?,
        expect("jump bundle side", DiagramNode::DvJumpBundleSide, 324)?,
        expect(
            "jump Grassmannian side",
            DiagramNode::DvJumpGrassmannianSide,
            315,
        )?,
        expect("Peskine jump to P9", DiagramNode::CongruenceJumpToP9, 10)?,
    ];
    let mut jump_ok = true;
    let mut detail = String::new();
    for k in 3..=6usize {
        for n in (3 * k + 1)..=20usize {
            let got = count_exceptional(DiagramNode::GeneralJump { k, n })?;
            let want = binomial(n as u64 - 1, k as u64 - 2);
            if got != want {
                jump_ok = false;
                detail = format!("mismatch at (k,n) = ({k},{n}): {got} vs {want}");
            }
        }
    }
    if jump_ok {
        detail = "a - b = C(n-1,k-2) for 3 <= k <= 6, 3k < n <= 20".into();
    }
    checks.push(Check::new("general jump count", jump_ok, detail));
    Ok(checks)
}

fn collection_checks(jobs: usize) -> Vec<Check> {
    let tasks: Vec<Box<dyn FnOnce() -> Check + Send>> = vec![
        Box::new(|| match verify_collection(CollectionName::T) {
            Ok(r) => Check::new(
                "collection T (9 objects)",
                r.pass && r.inconclusive == 0,
                format!("{} checks, {} inconclusive", r.checks.len(), r.inconclusive),
            ),
            Err(e) => Check::new("collection T (9 objects)", false, e.to_string()),
        }),
        Box::new(|| match verify_collection(CollectionName::P) {
            Ok(r) => {
                let failing: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| {
                        format!(
                            "Hom({}, {}) {}",
                            c.source,
                            c.target,
                            c.verdict.describe()
                        )
                    })
                    .collect();
                Check::new(
                    "collection P (4 objects)",
                    r.pass && r.inconclusive == 0,
                    if failing.is_empty() {
                        format!("{} checks, {} inconclusive", r.checks.len(), r.inconclusive)
                    } else {
                        failing.join("; ")
                    },
                )
            }
            Err(e) => Check::new("collection P (4 objects)", false, e.to_string()),
        }),
        Box::new(|| match verify_collection(CollectionName::W) {
            Ok(r) => Check::new(
                "collection W (6 objects)",
                r.pass && r.inconclusive == 0,
                format!("{} checks, {} inconclusive", r.checks.len(), r.inconclusive),
            ),
            Err(e) => Check::new("collection W (6 objects)", false, e.to_string()),
        }),
    ];
    run_jobs(jobs, tasks)
}

fn cmd_verify(args: &[String], jobs: usize) -> CliResult<Report> {
    let mode = args
        .first()
        .ok_or_else(|| CliError::Usage("verify needs a mode".into()))?;
    let (variety, checks) = match mode.as_str() {
        "table1" => ("Table 1".to_string(), table1_checks()?),
        "counts" => ("exceptional-object counts".to_string(), counts_checks()?),
        "collections" => ("exceptional collections".to_string(), collection_checks(jobs)),
        "lemma-van" => {
            let report = lemma_van_check()?;
            let counts = report
                .factor_counts
                .iter()
                .map(|(q, c)| format!("q={q}:{c}"))
                .collect::<Vec<_>>()
                .join(" ");
            let check = Check::new(
                "wedge powers acyclic on Fl(1,3,9)",
                report.pass,
                if report.failures.is_empty() {
                    format!("H0 = {}; factors {counts}", report.h0)
                } else {
                    report.failures.join("; ")
                },
            );
            ("Koszul wedge enumeration".to_string(), vec![check])
        }
        "coble-fiber" => {
            let report = coble_fiber_check()?;
            let detail = report
                .per_j
                .iter()
                .map(|(j, max)| match max {
                    Some(d) => format!("j={j}: max degree {d}"),
                    None => format!("j={j}: acyclic"),
                })
                .collect::<Vec<_>>()
                .join("; ");
            let check = Check::new("fiberwise degree bound on P8", report.pass, detail);
            ("Coble fiber checks".to_string(), vec![check])
        }
        "hodge-jump" => {
            if args.len() != 3 {
                return Err(CliError::Usage("verify hodge-jump needs k n".into()));
            }
            let k: usize = parse_num(&args[1], "k")?;
            let n: usize = parse_num(&args[2], "n")?;
            let ok = hodge_jump_identity_check(k, n)?;
            (
                format!("jump identity on Gr({k},{n})"),
                vec![Check::new("hodge_jump_identity", ok, ok.to_string())],
            )
        }
        other => return Err(CliError::Usage(format!("unknown verify mode {other}"))),
    };
    Ok(Report {
        variety,
        dimension: 0,
        hodge: Vec::new(),
        checks,
    })
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            if !report.hodge.is_empty() {
                s.push_str("p,q,h\n");
                for (p, q, h) in &report.hodge {
                    s.push_str(&format!("{p},{q},{h}\n"));
                }
            }
            if !report.checks.is_empty() {
                s.push_str("check,status,details\n");
                for c in &report.checks {
                    let details = c.details.replace(',', ";");
                    s.push_str(&format!("{},{},{}\n", c.name, c.status, details));
                }
            }
            s
        }
        Format::Md => {
            let mut s = format!("## {} (dim {})\n", report.variety, report.dimension);
            if !report.hodge.is_empty() {
                s.push_str("\n| weight | entries |\n|---|---|\n");
                let mut by_weight: std::collections::BTreeMap<u64, Vec<(u64, u64, &str)>> =
                    std::collections::BTreeMap::new();
                for (p, q, h) in &report.hodge {
                    by_weight.entry(p + q).or_default().push((*p, *q, h));
                }
                for (m, mut entries) in by_weight {
                    entries.sort_by(|a, b| b.0.cmp(&a.0));
                    let row = entries
                        .iter()
                        .map(|(_, _, h)| h.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    s.push_str(&format!("| h^{m} | {row} |\n"));
                }
            }
            if !report.checks.is_empty() {
                s.push_str("\n| check | status | details |\n|---|---|---|\n");
                for c in &report.checks {
                    s.push_str(&format!(
                        "| {} | {} | {} |\n",
                        c.name,
                        c.status,
                        c.details.replace('|', "/")
                    ));
                }
            }
            s
        }
    }
}

fn split_options(args: &[String]) -> CliResult<(Vec<String>, Options)> {
    let mut positional = Vec::new();
    let mut options = Options {
        format: Format::Json,
        jobs: 1,
        out: None,
    };
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--format" => {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--format needs a value".into()))?;
                options.format = match value.as_str() {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    "md" => Format::Md,
                    other => return Err(CliError::Usage(format!("unknown format {other}"))),
                };
                i += 2;
            }
            "--jobs" => {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--jobs needs a value".into()))?;
                options.jobs = parse_num(value, "jobs")?;
                if options.jobs == 0 {
                    return Err(CliError::Usage("--jobs must be at least 1".into()));
                }
                i += 2;
            }
            "--out" => {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--out needs a file".into()))?;
                options.out = Some(value.clone());
                i += 2;
            }
            // Section flags are consumed by the subcommand.
            "--cy" => {
                positional.push(args[i].clone());
                if let Some(v) = args.get(i + 1) {
                    positional.push(v.clone());
                }
                i += 2;
            }
            "--vanishing" => {
                positional.push(args[i].clone());
                i += 1;
            }
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag {other}")));
            }
            _ => {
                positional.push(args[i].clone());
                i += 1;
            }
        }
    }
    Ok((positional, options))
}

/// Entry point shared by the binary and the tests. Returns the exit code:
/// 0 on success, 1 when a verification check failed (or the engine found an
/// inconsistency), 2 on invalid input.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (positional, options) = match split_options(args) {
        Ok(x) => x,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "{msg}\n{}", usage());
            return 2;
        }
        Err(CliError::Engine(_)) => unreachable!("option parsing is pure"),
    };
    let Some(command) = positional.first() else {
        let _ = writeln!(err, "{}", usage());
        return 2;
    };
    let rest = &positional[1..];
    let result = match command.as_str() {
        "twisted" => cmd_twisted(rest),
        "grass" => cmd_grass(rest),
        "section" => cmd_section(rest),
        "derive" => cmd_derive(rest),
        "schubert" => cmd_schubert(rest),
        "verify" => cmd_verify(rest, options.jobs),
        other => Err(CliError::Usage(format!("unknown command {other}"))),
    };
    let report = match result {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "{msg}\n{}", usage());
            return 2;
        }
        Err(CliError::Engine(e)) => match e {
            EngineError::Inconsistency(_)
            | EngineError::InexactDivision(_)
            | EngineError::NegativeCoefficient(_) => {
                let _ = writeln!(err, "verification failed: {e}");
                return 1;
            }
            other => {
                let _ = writeln!(err, "invalid input: {other}");
                return 2;
            }
        },
    };
    let rendered = render(&report, options.format);
    match options.out {
        Some(path) => {
            if let Err(e) = fs::write(&path, rendered) {
                let _ = writeln!(err, "cannot write {path}: {e}");
                return 2;
            }
        }
        None => {
            let _ = out.write_all(rendered.as_bytes());
        }
    }
    if report.verification_failed() {
        1
    } else {
        0
    }
}
