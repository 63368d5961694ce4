//! Command-line front end: JSON input parsing, subcommand dispatch, report
//! serialization, batch processing, and the built-in corpus self-test.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`), never as floating-point
//! numbers. Exit codes: 0 success, 2 parse/validation error, 3 internal
//! disagreement between procedures the mathematics proves equivalent,
//! 4 resource cap exceeded.

use std::io::Read;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize, Serializer};

use crate::classify::{self, ClassificationReport};
use crate::cubiccurve::{self, CubicClass};
use crate::exactpoly::{LinMap3, TernaryForm};
use crate::oracle::{self, QuadraticPresentation};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::tensor3::{hat, parse_word, relation_space, w0, RelationSpace, TensorN};
use crate::{Error, Result};

pub fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(r))
}

// --- input documents ---------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCoeff {
    pub word: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoCoeff {
    pub mono: [u32; 3],
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialDoc {
    pub terms: Vec<MonoCoeff>,
}

/// One unit of work: a superpotential given by words, a pair `(f, λ)`
/// standing for `w = w₀ − λ·hat(f)`, or a bare relation list for the
/// graded-dimension oracle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub superpotential: Option<Vec<WordCoeff>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<PotentialDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<WordCoeff>>>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: InputDocument = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("malformed JSON document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        let variants = [
            self.superpotential.is_some(),
            self.potential.is_some(),
            self.relations.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if variants != 1 {
            return Err(Error::Input(
                "document must contain exactly one of: superpotential, potential, relations".into(),
            ));
        }
        if self.lambda.is_some() && self.potential.is_none() {
            return Err(Error::Input("lambda only accompanies a potential".into()));
        }
        Ok(())
    }

    /// The superpotential tensor this document denotes.
    pub fn to_tensor(&self) -> Result<TensorN> {
        if let Some(words) = &self.superpotential {
            let mut terms = Vec::with_capacity(words.len());
            for wc in words {
                let w = parse_word(&wc.word)?;
                if w.len() != 3 {
                    return Err(Error::Input(format!(
                        "superpotential word {:?} must have length 3",
                        wc.word
                    )));
                }
                terms.push((w, parse_rat(&wc.coeff)?));
            }
            return TensorN::new(3, terms);
        }
        if let Some(p) = &self.potential {
            let lambda = match &self.lambda {
                Some(l) => parse_rat(l)?,
                None => {
                    return Err(Error::Input(
                        "potential documents need a lambda to denote w = w0 - lambda*hat(f)".into(),
                    ))
                }
            };
            let f = potential_to_form(p)?;
            return Ok(w0().sub(&hat(&f).scale(&lambda)));
        }
        Err(Error::Input(
            "a relations document carries no superpotential; use the hilbert subcommand".into(),
        ))
    }

    /// The ternary cubic this document denotes (for the cubic subcommands).
    pub fn to_form(&self) -> Result<TernaryForm> {
        if let Some(p) = &self.potential {
            return potential_to_form(p);
        }
        if self.superpotential.is_some() {
            return Ok(crate::tensor3::cyc(&self.to_tensor()?).bar());
        }
        Err(Error::Input("no cubic form in a relations document".into()))
    }

    /// The relation space this document presents.
    pub fn to_relations(&self) -> Result<RelationSpace> {
        if let Some(rels) = &self.relations {
            let mut tensors = Vec::with_capacity(rels.len());
            for rel in rels {
                let mut terms = Vec::with_capacity(rel.len());
                for wc in rel {
                    let w = parse_word(&wc.word)?;
                    if w.len() != 2 {
                        return Err(Error::Input(format!(
                            "relation word {:?} must have length 2",
                            wc.word
                        )));
                    }
                    terms.push((w, parse_rat(&wc.coeff)?));
                }
                tensors.push(TensorN::new(2, terms)?);
            }
            return RelationSpace::from_tensors(tensors);
        }
        relation_space(&self.to_tensor()?)
    }
}

fn potential_to_form(p: &PotentialDoc) -> Result<TernaryForm> {
    let mut terms = Vec::with_capacity(p.terms.len());
    for mc in &p.terms {
        if mc.mono.iter().sum::<u32>() != 3 {
            return Err(Error::Input(format!(
                "potential monomial {:?} must have degree 3",
                mc.mono
            )));
        }
        terms.push((mc.mono, parse_rat(&mc.coeff)?));
    }
    TernaryForm::new(3, terms)
}

// --- serialization of results ------------------------------------------------

fn form_dto(f: &TernaryForm) -> Vec<MonoCoeff> {
    f.terms()
        .map(|(m, c)| MonoCoeff {
            mono: m.0,
            coeff: format_rat(c),
        })
        .collect()
}

fn tensor_dto(t: &TensorN) -> Vec<WordCoeff> {
    t.terms()
        .map(|(w, c)| WordCoeff {
            word: crate::tensor3::word_name(w),
            coeff: format_rat(c),
        })
        .collect()
}

#[derive(Serialize)]
struct ClassifyJson {
    input: Vec<WordCoeff>,
    mu: String,
    wbar: Vec<MonoCoeff>,
    curve_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j_invariant: Option<String>,
    calabi_yau: bool,
    reasons: Vec<String>,
}

#[derive(Serialize)]
struct CrosscheckJson {
    input: Vec<WordCoeff>,
    mu: String,
    wbar: Vec<MonoCoeff>,
    curve_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j_invariant: Option<String>,
    table1_verdict: bool,
    rank_one_verdict: bool,
    atv_verdict: bool,
    hilbert_dims: Vec<usize>,
    hilbert_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    hilbert_first_mismatch: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point_scheme: Option<Vec<MonoCoeff>>,
    agreement: bool,
    calabi_yau: bool,
    reasons: Vec<String>,
}

fn class_fields(class: &CubicClass) -> (String, Option<String>) {
    match class {
        CubicClass::Smooth(j) => ("smooth".into(), Some(format_rat(j))),
        other => (other.name(), None),
    }
}

fn crosscheck_json(r: &ClassificationReport) -> CrosscheckJson {
    let (curve_class, j_invariant) = class_fields(&r.curve_class);
    CrosscheckJson {
        input: tensor_dto(&r.input),
        mu: format_rat(&r.mu),
        wbar: form_dto(&r.wbar),
        curve_class,
        j_invariant,
        table1_verdict: r.table1_verdict,
        rank_one_verdict: r.rank_one_verdict,
        atv_verdict: r.atv_verdict,
        hilbert_dims: r.hilbert.dims.clone(),
        hilbert_bound: r.hilbert_bound,
        hilbert_first_mismatch: r.hilbert.first_mismatch,
        point_scheme: r.point_scheme.as_ref().map(form_dto),
        agreement: r.agreement,
        calabi_yau: r.is_calabi_yau(),
        reasons: r.reasons.clone(),
    }
}

// --- command line ---------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "cy3",
    about = "Decide whether the Jacobian algebra of a degree-3 superpotential is 3-Calabi-Yau, classify plane cubics, and compute graded data — in exact rational arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonInput {
    /// Input file with one JSON document (defaults to stdin)
    file: Option<String>,
    /// Emit a machine-readable JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Table-based 3-Calabi-Yau verdict for a superpotential
    Classify(CommonInput),
    /// All three equivalent verdicts plus the Hilbert falsifier
    Crosscheck {
        #[command(flatten)]
        input: CommonInput,
        /// Degree bound for the Hilbert check
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// The point-scheme cubic H(wbar) + 24 mu^2 wbar
    PointScheme(CommonInput),
    /// Plane-cubic operations
    Cubic {
        #[command(subcommand)]
        op: CubicOp,
    },
    /// Graded dimensions of TV/(relations) against (1-t)^-3
    Hilbert {
        /// Input document (superpotential, potential, or relations)
        #[arg(long)]
        relations: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Verify Clifford shape of a symmetric-case superpotential under theta
    Clifford {
        #[command(flatten)]
        input: CommonInput,
        /// Change of basis as nine rationals "a,b,c;d,e,f;g,h,i"
        #[arg(long)]
        theta: Option<String>,
    },
    /// Process one JSON document per line, in parallel, preserving order
    Batch {
        file: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run the embedded corpus and property suites
    Selftest,
}

#[derive(Subcommand)]
enum CubicOp {
    /// Divisor class of {f = 0}
    Classify(CommonInput),
    /// The coefficient invariants S, T and the discriminant
    Invariants(CommonInput),
}

fn read_input(file: &Option<String>) -> Result<String> {
    match file.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {path}: {e}"))),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::CliffordInconsistent => 3,
        Error::DegreeCap { .. } => 4,
        _ => 2,
    }
}

/// Degree bound for Hilbert checks: flag, else `CY3_MAX_DEGREE`, else 6.
fn hilbert_bound(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("CY3_MAX_DEGREE")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(6)
}

fn parse_theta(text: &str) -> Result<LinMap3> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 3 {
        return Err(Error::Input("theta needs three ;-separated rows".into()));
    }
    let mut m: [[Rat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::default()));
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 3 {
            return Err(Error::Input(
                "theta rows need three ,-separated entries".into(),
            ));
        }
        for (j, cell) in cells.iter().enumerate() {
            m[i][j] = parse_rat(cell)?;
        }
    }
    Ok(LinMap3::new(m))
}

/// Entry point used by the binary; returns the process exit code.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args)
}

pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exits
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify(input) => {
            let doc = InputDocument::parse(&read_input(&input.file)?)?;
            let w = doc.to_tensor()?;
            let cw = crate::tensor3::cyc(&w);
            let (verdict, reasons) = classify::table1_verdict(&w)?;
            let m = crate::tensor3::mu(&cw)?;
            let f = cw.bar();
            let class = cubiccurve::classify_cubic(&f)?;
            if input.json {
                let (curve_class, j_invariant) = class_fields(&class);
                let report = ClassifyJson {
                    input: tensor_dto(&cw),
                    mu: format_rat(&m),
                    wbar: form_dto(&f),
                    curve_class,
                    j_invariant,
                    calabi_yau: verdict,
                    reasons,
                };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("mu(w)        = {}", format_rat(&m));
                println!("wbar         = {f}");
                println!("curve class  = {}", class.name());
                println!("3-Calabi-Yau = {verdict}");
                for r in &reasons {
                    println!("  - {r}");
                }
            }
            Ok(0)
        }
        Command::Crosscheck { input, max_degree } => {
            let doc = InputDocument::parse(&read_input(&input.file)?)?;
            let w = doc.to_tensor()?;
            let report = classify::crosscheck(&w, hilbert_bound(max_degree))?;
            print_crosscheck(&report, input.json);
            Ok(if report.agreement { 0 } else { 3 })
        }
        Command::PointScheme(input) => {
            let doc = InputDocument::parse(&read_input(&input.file)?)?;
            let w = doc.to_tensor()?;
            let ps = classify::point_scheme(&w)?;
            if input.json {
                #[derive(Serialize)]
                struct PointSchemeJson {
                    point_scheme: Vec<MonoCoeff>,
                }
                let out = PointSchemeJson {
                    point_scheme: form_dto(&ps),
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("E' = {{ {ps} = 0 }}");
            }
            Ok(0)
        }
        Command::Cubic { op } => {
            let (input, invariants) = match op {
                CubicOp::Classify(i) => (i, false),
                CubicOp::Invariants(i) => (i, true),
            };
            let doc = InputDocument::parse(&read_input(&input.file)?)?;
            let f = doc.to_form()?;
            if invariants {
                let pair = cubiccurve::aronhold_invariants(&f);
                if input.json {
                    #[derive(Serialize)]
                    struct InvariantsJson {
                        s: String,
                        t: String,
                        discriminant: String,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        j_invariant: Option<String>,
                    }
                    let out = InvariantsJson {
                        s: format_rat(&pair.s),
                        t: format_rat(&pair.t),
                        discriminant: format_rat(&pair.delta),
                        j_invariant: cubiccurve::j_invariant(&f).ok().map(|j| format_rat(&j)),
                    };
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else {
                    println!("S            = {}", format_rat(&pair.s));
                    println!("T            = {}", format_rat(&pair.t));
                    println!("discriminant = {}", format_rat(&pair.delta));
                    match cubiccurve::j_invariant(&f) {
                        Ok(j) => println!("j            = {}", format_rat(&j)),
                        Err(_) => println!("j            = undefined (singular)"),
                    }
                }
            } else {
                let class = cubiccurve::classify_cubic(&f)?;
                if input.json {
                    #[derive(Serialize)]
                    struct CubicJson {
                        form: Vec<MonoCoeff>,
                        class: String,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        j_invariant: Option<String>,
                    }
                    let (name, j) = class_fields(&class);
                    let out = CubicJson {
                        form: form_dto(&f),
                        class: name,
                        j_invariant: j,
                    };
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else {
                    println!("f     = {f}");
                    println!("class = {}", class.name());
                }
            }
            Ok(0)
        }
        Command::Hilbert {
            relations,
            max_degree,
            json,
        } => {
            let doc = InputDocument::parse(&read_input(&Some(relations))?)?;
            let rels = doc.to_relations()?;
            let p = QuadraticPresentation::new(rels);
            let report = oracle::hilbert_check(&p, hilbert_bound(max_degree))?;
            if json {
                #[derive(Serialize)]
                struct HilbertJson {
                    dims: Vec<usize>,
                    targets: Vec<usize>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    first_mismatch: Option<usize>,
                    matches_inverse_cube: bool,
                }
                let out = HilbertJson {
                    targets: (0..report.dims.len())
                        .map(oracle::HilbertReport::target)
                        .collect(),
                    dims: report.dims.clone(),
                    first_mismatch: report.first_mismatch,
                    matches_inverse_cube: report.passes(),
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("graded dims: {:?}", report.dims);
                match report.first_mismatch {
                    None => println!(
                        "matches (1-t)^-3 through degree {}",
                        report.dims.len() - 1
                    ),
                    Some(d) => println!(
                        "departs from (1-t)^-3 at degree {d} (got {}, want {})",
                        report.dims[d],
                        oracle::HilbertReport::target(d)
                    ),
                }
            }
            Ok(0)
        }
        Command::Clifford { input, theta } => {
            let doc = InputDocument::parse(&read_input(&input.file)?)?;
            let w = doc.to_tensor()?;
            let th = match theta {
                Some(t) => parse_theta(&t)?,
                None => LinMap3::identity(),
            };
            let data = classify::verify_clifford(&w, &th)?;
            if input.json {
                println!("{}", serde_json::to_string_pretty(&data).unwrap());
            } else {
                println!(
                    "Clifford form confirmed: (a, b, c) = ({}, {}, {})",
                    format_rat(&data.a),
                    format_rat(&data.b),
                    format_rat(&data.c)
                );
                println!("abc = {}", format_rat(&(&data.a * &data.b * &data.c)));
                for (name, rel) in ["r1", "r2", "r3"].iter().zip(&data.relations) {
                    println!("  {name}: {rel}");
                }
                println!("x^2, y^2, z^2 are central: verified");
            }
            Ok(0)
        }
        Command::Batch { file, max_degree } => run_batch(&file, hilbert_bound(max_degree)),
        Command::Selftest => {
            let results = crate::corpus::selftest();
            let mut all_ok = true;
            for (name, ok) in &results {
                println!("{} — {name}", if *ok { "ok  " } else { "FAIL" });
                all_ok &= ok;
            }
            println!(
                "{}/{} suites passed",
                results.iter().filter(|(_, ok)| *ok).count(),
                results.len()
            );
            Ok(if all_ok { 0 } else { 3 })
        }
    }
}

fn print_crosscheck(report: &ClassificationReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&crosscheck_json(report)).unwrap()
        );
        return;
    }
    println!("c(w)          = {}", report.input);
    println!("mu(w)         = {}", format_rat(&report.mu));
    println!("wbar          = {}", report.wbar);
    println!("curve class   = {}", report.curve_class.name());
    println!("table verdict = {}", report.table1_verdict);
    println!("rank-one      = {}", report.rank_one_verdict);
    println!("presentation  = {}", report.atv_verdict);
    println!("hilbert dims  = {:?}", report.hilbert.dims);
    if let Some(ps) = &report.point_scheme {
        println!("point scheme  = {{ {ps} = 0 }}");
    }
    println!("agreement     = {}", report.agreement);
    println!("3-Calabi-Yau  = {}", report.is_calabi_yau());
    for r in &report.reasons {
        println!("  - {r}");
    }
}

/// Batch mode: JSON-lines in, JSON-lines out, order preserved, one error
/// record per malformed line. The exit code is the worst per-line outcome.
fn run_batch(path: &str, bound: usize) -> Result<i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    let lines: Vec<&str> = text.lines().collect();
    let results: Vec<OnceLock<(i32, String)>> = lines.iter().map(|_| OnceLock::new()).collect();
    let counter = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(lines.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = counter.fetch_add(1, Ordering::SeqCst);
                if i >= lines.len() {
                    break;
                }
                let outcome = batch_line(i + 1, lines[i], bound);
                let _ = results[i].set(outcome);
            });
        }
    });
    let mut worst = 0i32;
    for cell in &results {
        let (code, line) = cell.get().expect("worker filled every slot");
        println!("{line}");
        // severity order: internal bug (3) > cap (4) > parse (2) > ok
        let rank = |c: i32| match c {
            3 => 3,
            4 => 2,
            2 => 1,
            _ => 0,
        };
        if rank(*code) > rank(worst) {
            worst = *code;
        }
    }
    Ok(worst)
}

fn batch_line(lineno: usize, text: &str, bound: usize) -> (i32, String) {
    #[derive(Serialize)]
    struct BatchOk {
        line: usize,
        report: CrosscheckJson,
    }
    #[derive(Serialize)]
    struct BatchErr {
        line: usize,
        error: String,
    }
    let attempt = InputDocument::parse(text)
        .and_then(|doc| doc.to_tensor())
        .and_then(|w| classify::crosscheck(&w, bound));
    match attempt {
        Ok(report) => {
            let code = if report.agreement { 0 } else { 3 };
            let body = serde_json::to_string(&BatchOk {
                line: lineno,
                report: crosscheck_json(&report),
            })
            .unwrap();
            (code, body)
        }
        Err(e) => {
            let body = serde_json::to_string(&BatchErr {
                line: lineno,
                error: e.to_string(),
            })
            .unwrap();
            (exit_code(&e), body)
        }
    }
}
