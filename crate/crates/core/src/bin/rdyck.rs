use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rdyck::decomp;
use rdyck::histories::{self, Side};
use rdyck::incidence::{self, IncidenceSpec, WeightKind};
use rdyck::paths::{self, LatticeWord};
use rdyck::tilings::{self, Statistic, Tiling, Variant};

/// Rational Dyck paths, Dyck tilings and their bijections.
#[derive(Parser, Debug)]
#[command(name = "rdyck", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Frame {
    #[arg(long, default_value_t = 1)]
    a: usize,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

/// A tiling given as JSON (inline or a file), or every cover-inclusive
/// tiling above `--path`, optionally restricted to one upper path.
#[derive(Args, Debug, Clone)]
struct TilingInput {
    #[arg(long, conflicts_with = "path")]
    tiling: Option<String>,
    #[arg(long)]
    path: Option<String>,
    #[arg(long, requires = "path")]
    upper: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the (a,b)-Dyck paths of size n with step and height sequences.
    Paths {
        #[command(flatten)]
        frame: Frame,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        full: bool,
    },
    /// Generating function of cover-inclusive tilings above a path.
    Zeta {
        #[command(flatten)]
        frame: Frame,
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value_t = Stat::Art)]
        stat: Stat,
    },
    /// Incidence matrix over all words with n N's and e E's.
    Matrix {
        #[command(flatten)]
        frame: Frame,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value_t = Kind::I)]
        kind: Kind,
        #[arg(long)]
        invert: bool,
        #[arg(long, env = "RDYCK_MAX_CELLS", default_value_t = 8)]
        max_cells: usize,
    },
    /// Strip decompositions, grid and Stirling data of a Dyck path.
    Decompose {
        #[command(flatten)]
        frame: Frame,
        #[arg(long)]
        path: String,
    },
    /// Hermite history of (1,1)-tilings, or the top path of a word with `--invert`.
    Hermite {
        #[command(flatten)]
        frame: Frame,
        #[command(flatten)]
        input: TilingInput,
        #[arg(long, requires = "word")]
        invert: bool,
        #[arg(long)]
        word: Option<String>,
    },
    /// DTS word of (1,1)-tilings, or the tiling of a word with `--invert`.
    Dts {
        #[command(flatten)]
        frame: Frame,
        #[command(flatten)]
        input: TilingInput,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(long, requires = "word")]
        invert: bool,
        #[arg(long)]
        word: Option<String>,
    },
    /// b-Stirling permutation of a step sequence, or its inverse.
    Stirling {
        #[command(flatten)]
        frame: Frame,
        /// Step sequence, or a Stirling word with `--invert`.
        seq: String,
        #[arg(long)]
        invert: bool,
    },
    /// Weight of tilings, with the strip-word formula where it applies.
    Weight {
        #[command(flatten)]
        frame: Frame,
        #[command(flatten)]
        input: TilingInput,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Stat {
    Art,
    Tiles,
    Area,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Golden,
    #[value(name = "duality-n4")]
    DualityN4,
    Incidence,
    Weights,
    Counting,
    Roundtrip,
    All,
}

enum Failure {
    Usage(String),
    Cap(String),
    Verify,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print_out(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn print_out(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Paths { frame, n, full } => cmd_paths(&frame, n, full),
        Command::Zeta { frame, path, stat } => cmd_zeta(&frame, &path, stat),
        Command::Matrix { frame, n, e, kind, invert, max_cells } => cmd_matrix(&frame, n, e, kind, invert, max_cells),
        Command::Decompose { frame, path } => cmd_decompose(&frame, &path),
        Command::Hermite { frame, input, invert, word } => cmd_hermite(&frame, &input, invert, word.as_deref()),
        Command::Dts { frame, input, side, invert, word } => cmd_dts(&frame, &input, side, invert, word.as_deref()),
        Command::Stirling { frame, seq, invert } => cmd_stirling(&frame, &seq, invert),
        Command::Weight { frame, input } => cmd_weight(&frame, &input),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

fn word(text: &str) -> Result<LatticeWord, Failure> {
    Ok(paths::parse_word(text)?)
}

/// Comma or space separated integers, or a run of single digits.
fn parse_seq(text: &str) -> Result<Vec<usize>, Failure> {
    let text = text.trim();
    let parts: Vec<&str> = if text.contains([',', ' ']) {
        text.split([',', ' ']).filter(|s| !s.is_empty()).collect()
    } else {
        text.split("").filter(|s| !s.is_empty()).collect()
    };
    parts
        .iter()
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("bad integer {s:?} in {text:?}"))))
        .collect()
}

fn show_seq(s: &[usize]) -> String {
    let sep = if s.iter().any(|&v| v > 9) { "," } else { "" };
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn no_latex(frame: &Frame) -> Result<(), Failure> {
    if frame.format == Format::Latex {
        return Err(Failure::Usage("latex output is only available for zeta and matrix".into()));
    }
    Ok(())
}

fn emit(frame: &Frame, value: Value, plain: String) -> Out {
    no_latex(frame)?;
    Ok(match frame.format {
        Format::Json => serde_json::to_string_pretty(&value)?,
        _ => plain,
    })
}

fn cmd_paths(frame: &Frame, n: usize, full: bool) -> Out {
    let list = paths::dyck_paths(frame.a, frame.b, n)?;
    let rows: Vec<(String, Vec<usize>, Vec<usize>)> = list
        .iter()
        .map(|p| Ok((p.to_string(), paths::step_sequence(p, frame.a, frame.b)?, paths::height_sequence(p, frame.a, frame.b)?)))
        .collect::<Result<_, paths::PathError>>()?;
    let shown = if rows.len() > 1000 && !full { &rows[..0] } else { &rows[..] };
    let value = json!({
        "a": frame.a,
        "b": frame.b,
        "n": n,
        "count": rows.len(),
        "paths": shown.iter().map(|(w, u, h)| json!({"word": w, "steps": u, "heights": h})).collect::<Vec<_>>(),
    });
    let mut plain = format!("{} paths", rows.len());
    for (w, u, h) in shown {
        plain.push_str(&format!("\n{w}  u={}  h={}", show_seq(u), show_seq(h)));
    }
    emit(frame, value, plain)
}

fn cmd_zeta(frame: &Frame, path: &str, stat: Stat) -> Out {
    let lam = word(path)?;
    let stat = match stat {
        Stat::Art => Statistic::Art,
        Stat::Tiles => Statistic::Tiles,
        Stat::Area => Statistic::Area,
    };
    let z = tilings::zeta(&lam, frame.a, frame.b, stat)?;
    Ok(match frame.format {
        Format::Json => json!(z.coeffs()).to_string(),
        Format::Latex => z.to_latex(),
        Format::Plain => z.to_string(),
    })
}

fn cmd_matrix(frame: &Frame, n: usize, e: usize, kind: Kind, invert: bool, cap: usize) -> Out {
    if n + e > cap {
        return Err(Failure::Cap(format!("words of length {} exceed the cap {cap}; raise --max-cells", n + e)));
    }
    let kind = match kind {
        Kind::I => WeightKind::I,
        Kind::II => WeightKind::II,
    };
    let mut m = incidence::build_matrix(&IncidenceSpec::new(frame.a, frame.b, n, e, kind))?;
    if invert {
        m = incidence::invert_incidence(&m)?;
    }
    Ok(match frame.format {
        Format::Json => m.to_json().to_string(),
        Format::Latex => m.to_latex(),
        Format::Plain => m.to_plain(),
    })
}

fn cmd_decompose(frame: &Frame, path: &str) -> Out {
    let (a, b) = (frame.a, frame.b);
    let pi = word(path)?;
    let th = decomp::theta_h(&pi, a, b)?;
    let tv = decomp::theta_v(&pi, a, b)?;
    let grid = decomp::vartheta(&pi, a, b)?;
    let u = paths::step_sequence(&pi, a, b)?;
    let mu = decomp::stirling_from_steps(&u, b)?;
    let nus = decomp::nu_sequences(&mu);
    let xis = decomp::xi_sequences(&nus)?;
    let rho = decomp::rho_sequences(&xis, a);
    let names = |v: &[LatticeWord]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let value = json!({
        "path": pi.to_string(),
        "theta_h": names(&th),
        "theta_v": names(&tv),
        "grid": grid.to_json(),
        "stirling": mu.to_string(),
        "nu": nus,
        "xi": xis,
        "rho": rho,
    });
    let seqs = |v: &[Vec<usize>]| v.iter().map(|s| show_seq(s)).collect::<Vec<_>>().join(" ");
    let plain = format!(
        "theta_h: {}\ntheta_v: {}\ngrid:\n{grid}\nstirling: {mu}\nnu: {}\nxi: {}",
        names(&th).join(" "),
        names(&tv).join(" "),
        seqs(&nus),
        seqs(&xis),
    );
    emit(frame, value, plain)
}

fn read_tilings(frame: &Frame, input: &TilingInput) -> Result<Vec<Tiling>, Failure> {
    if let Some(src) = &input.tiling {
        let text = if src.trim_start().starts_with('{') { src.clone() } else { std::fs::read_to_string(src)? };
        let value: Value = serde_json::from_str(&text)?;
        return Ok(vec![Tiling::from_json(&value).map_err(Failure::Usage)?]);
    }
    let Some(lower) = &input.path else {
        return Err(Failure::Usage("give --tiling or --path".into()));
    };
    let lower = word(lower)?;
    Ok(match &input.upper {
        Some(upper) => tilings::enumerate_tilings(&lower, &word(upper)?, frame.a, frame.b, Variant::Inclusive)?,
        None => tilings::tilings_above(&lower, frame.a, frame.b)?,
    })
}

fn require_unit(frame: &Frame) -> Result<(), Failure> {
    if (frame.a, frame.b) != (1, 1) {
        return Err(Failure::Usage("this command works with (1,1)-tilings".into()));
    }
    Ok(())
}

fn tiling_label(t: &Tiling) -> String {
    let tiles: Vec<String> = t
        .tiles
        .iter()
        .map(|d| d.boxes.iter().map(|(x, y)| format!("({x},{y})")).collect::<String>())
        .collect();
    format!("{} / {} [{}]", t.lower, t.upper, tiles.join(" "))
}

fn cmd_hermite(frame: &Frame, input: &TilingInput, invert: bool, w: Option<&str>) -> Out {
    require_unit(frame)?;
    if invert {
        let lower = word(input.path.as_deref().ok_or_else(|| Failure::Usage("--invert needs --path".into()))?)?;
        let omega = parse_seq(w.unwrap_or_default())?;
        let u = histories::top_path_from_hermite(&lower, &omega)?;
        let top = paths::from_step_sequence(&u, lower.e_count())?;
        return emit(frame, json!({"steps": u, "upper": top.to_string()}), format!("{top}  u={}", show_seq(&u)));
    }
    let mut rows = Vec::new();
    let mut plain = Vec::new();
    for t in read_tilings(frame, input)? {
        let l = histories::hermite_vector(&t)?;
        let omega = histories::hermite_word(&t)?;
        plain.push(format!("{}  l={}  omega={}", tiling_label(&t), show_seq(&l), show_seq(&omega)));
        rows.push(json!({"tiling": t.to_json(), "history": l, "word": omega}));
    }
    emit(frame, Value::Array(rows), plain.join("\n"))
}

fn cmd_dts(frame: &Frame, input: &TilingInput, side: SideArg, invert: bool, w: Option<&str>) -> Out {
    require_unit(frame)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    if invert {
        let lower = input.path.as_deref().map(word).transpose()?;
        let t = histories::dts_inverse(&parse_seq(w.unwrap_or_default())?, side, lower.as_ref())?;
        return emit(frame, t.to_json(), tiling_label(&t));
    }
    let mut rows = Vec::new();
    let mut plain = Vec::new();
    for t in read_tilings(frame, input)? {
        let nu = histories::dts_word(&t, side)?;
        plain.push(format!("{}  word={}", tiling_label(&t), show_seq(&nu)));
        rows.push(json!({"tiling": t.to_json(), "word": nu}));
    }
    emit(frame, Value::Array(rows), plain.join("\n"))
}

fn cmd_stirling(frame: &Frame, seq: &str, invert: bool) -> Out {
    let values = parse_seq(seq)?;
    if invert {
        let p = decomp::StirlingPerm::new(values, frame.b)?;
        let u = decomp::steps_from_stirling(&p);
        return emit(frame, json!(u), show_seq(&u));
    }
    let p = decomp::stirling_from_steps(&values, frame.b)?;
    emit(frame, json!(p.to_string()), p.to_string())
}

fn cmd_weight(frame: &Frame, input: &TilingInput) -> Out {
    let mut rows = Vec::new();
    let mut plain = Vec::new();
    for t in read_tilings(frame, input)? {
        let formula = match (t.a, t.b) {
            (1, _) => Some(decomp::weight_via_words_h(&t)?),
            (_, 1) => Some(decomp::weight_via_words_v(&t)?),
            _ => None,
        };
        let direct = t.weight();
        let shown = formula.map_or(String::new(), |f| format!("  formula={f}"));
        plain.push(format!("{}  weight={direct}{shown}", tiling_label(&t)));
        rows.push(json!({"tiling": t.to_json(), "weight": direct, "formula": formula}));
    }
    emit(frame, Value::Array(rows), plain.join("\n"))
}

type Check = (String, Result<bool, String>);

fn check<T: std::fmt::Display>(name: &str, f: impl FnOnce() -> Result<bool, T>) -> Check {
    (name.to_string(), f().map_err(|e| e.to_string()))
}

fn golden() -> Vec<Check> {
    let w = |s: &str| paths::parse_word(s).expect("literal word");
    vec![
        check("two (2,3)-Dyck paths of size 1", || {
            Ok::<_, paths::PathError>(paths::dyck_paths(2, 3, 1)?.len() == 2)
        }),
        check("zeta of NEN^2E^3NE^2 over (2,3)", || {
            Ok::<_, tilings::TilingError>(
                tilings::zeta(&w("NEN^2E^3NE^2"), 2, 3, Statistic::Art)?.to_string() == "1+2q+3q^2+3q^3+3q^4+q^5+q^6",
            )
        }),
        check("(1,2) incidence entries -q and q+q^4", || {
            let m = incidence::build_matrix(&IncidenceSpec::new(1, 2, 2, 3, WeightKind::I))?;
            let inv = incidence::invert_incidence(&m)?;
            let at = |m: &rdyck::qpoly::QPolyMatrix| m.entry("ENEEN", "NNEEE").map(ToString::to_string);
            Ok::<_, incidence::IncidenceError>(at(&m).as_deref() == Some("-q") && at(&inv).as_deref() == Some("q+q^4"))
        }),
        check("insertion history of 3142", || {
            Ok::<_, histories::HistoryError>(histories::insertion_history(&[3, 1, 4, 2])? == [0, 1, 0, 2])
        }),
        check("Hermite and DTS words of the worked tilings", || {
            let big = tilings::DyckTile::from_boxes(vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)], 1, 1)
                .map_err(|e| e.to_string())?;
            let d1 = Tiling::new(1, 1, w("NENNEENE"), w("N^4E^4"), vec![big], Variant::Inclusive);
            let lower = w("NNNEENEE");
            let upper = w("N^4E^4");
            let singles = tilings::region_of(&lower, &upper).map_err(|e| e.to_string())?;
            let d2 = Tiling::new(1, 1, lower, upper, singles.into_iter().map(tilings::DyckTile::single).collect(), Variant::Inclusive);
            let words = |t: &Tiling| -> Result<_, histories::HistoryError> {
                Ok((histories::hermite_word(t)?, histories::dts_word(t, Side::Right)?))
            };
            let (h1, n1) = words(&d1).map_err(|e| e.to_string())?;
            let (h2, n2) = words(&d2).map_err(|e| e.to_string())?;
            Ok::<_, String>(h1 == [3, 2, 1, 4] && h2 == [3, 2, 4, 1] && n1 == [2, 4, 3, 1] && n2 == [4, 3, 2, 1])
        }),
        check("decomposition of NENENE^2NE^2 over (2,3)", || {
            let p = w("NENENE^2NE^2");
            let grid = decomp::vartheta(&p, 2, 3)?;
            let mu = decomp::stirling_from_steps(&paths::step_sequence(&p, 2, 3)?, 3)?;
            let expected = [["NENE", "NENE", "NNEE"], ["ENEN", "NENE", "NENE"]];
            let grid_ok = (0..2).all(|j| (0..3).all(|i| grid.paths[j][i] == w(expected[j][i])));
            Ok::<_, decomp::DecompError>(
                grid_ok
                    && mu.to_string() == "123344432211"
                    && decomp::nu_sequences(&mu) == [vec![1, 3, 4, 2], vec![2, 4, 3, 1], vec![3, 4, 2, 1]],
            )
        }),
    ]
}

fn duality(max_n: usize) -> Vec<Check> {
    (0..=max_n)
        .map(|n| {
            check(&format!("duality for size {n}"), || {
                let mut ok = true;
                for lower in paths::dyck_paths(1, 1, n).map_err(|e| e.to_string())? {
                    for t in tilings::tilings_above(&lower, 1, 1).map_err(|e| e.to_string())? {
                        ok &= histories::duality_check(&t).map_err(|e| e.to_string())?;
                    }
                }
                Ok::<_, String>(ok)
            })
        })
        .collect()
}

fn incidence_suite() -> Vec<Check> {
    let mut specs = Vec::new();
    for k in 0..=3 {
        specs.push((1, 1, k, k));
    }
    specs.push((1, 2, 2, 3));
    specs.push((2, 3, 2, 3));
    let mut out = Vec::new();
    for (a, b, n, e) in specs {
        for kind in [WeightKind::I, WeightKind::II] {
            out.push(check(&format!("inverse vs enumeration ({a},{b}) {n}N/{e}E kind {kind}"), || {
                Ok::<_, incidence::IncidenceError>(
                    incidence::verify_inverse_vs_enumeration(&IncidenceSpec::new(a, b, n, e, kind))?.passed(),
                )
            }));
        }
    }
    out
}

fn weights() -> Vec<Check> {
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2)]
        .into_iter()
        .map(|(a, b, max_n)| {
            check(&format!("weight formula ({a},{b}) up to size {max_n}"), || {
                let mut ok = true;
                for n in 0..=max_n {
                    for lower in paths::dyck_paths(a, b, n).map_err(|e| e.to_string())? {
                        for t in tilings::tilings_above(&lower, a, b).map_err(|e| e.to_string())? {
                            let f = if a == 1 { decomp::weight_via_words_h(&t) } else { decomp::weight_via_words_v(&t) };
                            ok &= f.map_err(|e| e.to_string())? == t.weight();
                        }
                    }
                }
                Ok::<_, String>(ok)
            })
        })
        .collect()
}

fn counting() -> Vec<Check> {
    [(2, 3, 2), (1, 2, 3)]
        .into_iter()
        .map(|(a, b, max_n)| {
            check(&format!("paths above via grids ({a},{b}) up to size {max_n}"), || {
                let mut ok = true;
                for n in 0..=max_n {
                    for p in paths::dyck_paths(a, b, n).map_err(|e| e.to_string())? {
                        let above = paths::paths_above(&p, a, b).map_err(|e| e.to_string())?.len();
                        ok &= decomp::count_paths_above_via_grids(&p, a, b).map_err(|e| e.to_string())? == above;
                    }
                }
                Ok::<_, String>(ok)
            })
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n);
            out.push(q);
        }
    }
    out
}

fn roundtrip() -> Vec<Check> {
    vec![
        check("DTS inverse on permutations up to size 6", || {
            let mut ok = true;
            for n in 0..=6 {
                for p in permutations(n) {
                    for side in [Side::Right, Side::Left] {
                        let t = histories::dts_inverse(&p, side, None)?;
                        ok &= histories::dts_word(&t, side)? == p;
                    }
                }
            }
            Ok::<_, histories::HistoryError>(ok)
        }),
        check("Stirling maps up to size 4 and b = 3", || {
            let mut ok = true;
            for b in 1..=3 {
                for n in 0..=4usize {
                    let mut u = vec![0; n];
                    loop {
                        let p = decomp::stirling_from_steps(&u, b)?;
                        ok &= decomp::StirlingPerm::new(p.word.clone(), b).is_ok() && decomp::steps_from_stirling(&p) == u;
                        let Some(k) = (1..n).rev().find(|&k| u[k] < b * k) else { break };
                        u[k] += 1;
                        for v in &mut u[k + 1..] {
                            *v = 0;
                        }
                    }
                }
            }
            Ok::<_, decomp::DecompError>(ok)
        }),
        check("tiling decomposition over (1,2) up to size 3", || {
            let mut ok = true;
            for n in 0..=3 {
                for lower in paths::dyck_paths(1, 2, n).map_err(|e| e.to_string())? {
                    for t in tilings::tilings_above(&lower, 1, 2).map_err(|e| e.to_string())? {
                        let dec = decomp::decompose_tiling(&t).map_err(|e| e.to_string())?;
                        ok &= decomp::reassemble_tiling(&dec).map_err(|e| e.to_string())? == t;
                    }
                }
            }
            Ok::<_, String>(ok)
        }),
    ]
}

fn cmd_verify(suite: Suite) -> Out {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Golden {
        checks.extend(golden());
    }
    if all || suite == Suite::DualityN4 {
        checks.extend(duality(4));
    }
    if all || suite == Suite::Incidence {
        checks.extend(incidence_suite());
    }
    if all || suite == Suite::Weights {
        checks.extend(weights());
    }
    if all || suite == Suite::Counting {
        checks.extend(counting());
    }
    if all || suite == Suite::Roundtrip {
        checks.extend(roundtrip());
    }
    let width = checks.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    let mut failed = false;
    let mut lines = Vec::new();
    for (name, result) in &checks {
        let status = match result {
            Ok(true) => "pass".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        failed |= !matches!(result, Ok(true));
        lines.push(format!("{name:width$}  {status}"));
    }
    let report = lines.join("\n");
    if failed {
        print_out(&report);
        return Err(Failure::Verify);
    }
    Ok(report)
}
