use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use subrank::counting::{enumerate_side, OracleOptions};
use subrank::{
    analyze, brute_force_counts, complement_duality_check, complement_duality_pair_check, dual_of, macwilliams,
    mat_mul_transpose, row_op_invariance_check, weight_enumerator_with, AnalyzeOptions, BitMatrix, CountReport, Method,
    Mode, Side, WeightEnumerator,
};

use crate::config::{Cli, Command, Format};
use crate::search::{search, SearchOptions, SearchOutcome, Strategy};
use crate::CliError;

/// Rendered command output. `ok = false` means a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build()
            .map_err(|e| CliError::Setup(e.to_string()))?
            .install(|| dispatch(cli)),
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let oracle = OracleOptions {
        budget: cli.budget,
        ..Default::default()
    };
    match &cli.command {
        Command::Count { input, mode, list_sets } => {
            let m = read_matrix(input)?;
            let opts = AnalyzeOptions {
                oracle,
                list_sets: *list_sets,
                ..Default::default()
            };
            cmd_count(&m, (*mode).into(), &opts, cli.format)
        }
        Command::Weights {
            input,
            dual,
            max_dimension,
        } => cmd_weights(&read_matrix(input)?, *dual, *max_dimension, cli.format),
        Command::Sets { input } => cmd_sets(&read_matrix(input)?, &oracle, cli.format),
        Command::Search {
            k,
            n,
            exhaustive,
            samples,
            seed,
            keep,
        } => {
            let strategy = match (exhaustive, samples) {
                (true, _) => Strategy::Exhaustive,
                (false, Some(samples)) => Strategy::Random {
                    samples: *samples,
                    seed: *seed,
                },
                (false, None) => unreachable!("clap requires --samples without --exhaustive"),
            };
            let opts = SearchOptions {
                k: *k,
                n: *n,
                strategy,
                budget: cli.budget,
                keep: *keep,
                analyze: AnalyzeOptions {
                    oracle,
                    ..Default::default()
                },
            };
            cmd_search(&opts, cli.format)
        }
        Command::Verify {
            input,
            parity,
            trials,
            seed,
        } => {
            let g = read_matrix(input)?;
            let h = parity.as_deref().map(read_matrix).transpose()?;
            cmd_verify(&g, h.as_ref(), *trials, *seed, &oracle, cli.format)
        }
    }
}

pub fn read_matrix(path: &Path) -> Result<BitMatrix, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    Ok(BitMatrix::parse_text(&text)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn indent_matrix(out: &mut String, m: &BitMatrix) {
    for i in 0..m.rows() {
        let _ = writeln!(out, "    {}", m.row_string(i));
    }
}

fn coeff_list(we: &WeightEnumerator) -> String {
    let parts: Vec<String> = we.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn set_line(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn cmd_count(m: &BitMatrix, mode: Mode, opts: &AnalyzeOptions, format: Format) -> Result<Output, CliError> {
    let report = analyze(m, mode, opts)?;
    Ok(Output::ok(match format {
        Format::Json => to_json(&report),
        Format::Text => render_count(m, &report, opts)?,
    }))
}

fn render_count(m: &BitMatrix, report: &CountReport, opts: &AnalyzeOptions) -> Result<String, CliError> {
    let e = enumerate_side(m, opts.max_dimension)?;
    let (k, n) = (report.k(), report.n());
    let mut s = String::new();
    let _ = writeln!(s, "matrix: k = {k}, n = {n}");
    let perm = if e.systematic.is_identity_perm() {
        "identity".to_string()
    } else {
        let moved: Vec<String> = e.systematic.col_perm().iter().map(|p| (p + 1).to_string()).collect();
        format!("original column j -> [{}]", moved.join(" "))
    };
    let _ = writeln!(s, "step 1.1  systematic form [I | P], column permutation: {perm}");
    indent_matrix(&mut s, e.systematic.matrix());
    match report.side() {
        Side::Primal => {
            let _ = writeln!(s, "step 1.2  k < n-k: enumerate the code itself");
        }
        Side::Dual => {
            let _ = writeln!(s, "step 1.3  k >= n-k: enumerate the dual code [P^T | I]");
            indent_matrix(&mut s, &e.generator);
        }
    }
    let we = report.enumerator();
    let _ = writeln!(s, "step 2.1  weight enumerator: {we}");
    let _ = writeln!(s, "          coefficients: {}", coeff_list(we));
    match report.d_star() {
        Some(d) => {
            let _ = writeln!(
                s,
                "          d* = {d}; 3d*/2 > max(k, n-k): {}",
                if report.condition_holds() { "holds" } else { "fails" }
            );
        }
        None => {
            let _ = writeln!(s, "          d* undefined (zero code); nothing can be singular");
        }
    }
    let method = match report.method() {
        Method::Formula => "formula",
        Method::Oracle => "oracle (condition fails, brute force)",
        Method::Both => "both (formula and oracle agree)",
    };
    let _ = writeln!(
        s,
        "step 2.2  D = {}, I = {}  [method: {method}]",
        report.singular_count(),
        report.full_rank_count()
    );
    if let (Some(dep), Some(ind)) = (report.dependent_sets(), report.independent_sets()) {
        render_sets(&mut s, dep, ind);
    }
    Ok(s)
}

fn render_sets(s: &mut String, dep: &[Vec<usize>], ind: &[Vec<usize>]) {
    let _ = writeln!(s, "dependent sets ({}):", dep.len());
    for set in dep {
        let _ = writeln!(s, "    {}", set_line(set));
    }
    let _ = writeln!(s, "independent sets ({}):", ind.len());
    for set in ind {
        let _ = writeln!(s, "    {}", set_line(set));
    }
}

pub fn cmd_weights(m: &BitMatrix, dual: bool, max_dimension: usize, format: Format) -> Result<Output, CliError> {
    let (k, n) = (m.rows(), m.cols());
    let we = weight_enumerator_with(m, max_dimension)?;
    if !dual {
        return Ok(Output::ok(match format {
            Format::Json => to_json(&we),
            Format::Text => format!("W(x,y) = {we}\ncoefficients: {}\n", coeff_list(&we)),
        }));
    }
    let via_macwilliams = macwilliams(&we, k)?;
    let h = dual_of(&m.systematic_form()?);
    let direct = if n - k <= max_dimension {
        Some(weight_enumerator_with(&h, max_dimension)?)
    } else {
        None
    };
    let agree = direct.as_ref().map(|d| *d == via_macwilliams);
    let ok = agree != Some(false);
    let text = match format {
        Format::Json => to_json(&json!({
            "code": we,
            "dual": {
                "direct": direct,
                "macwilliams": via_macwilliams,
                "agree": agree,
            }
        })),
        Format::Text => {
            let mut s = format!("code:  W(x,y) = {we}\n       coefficients: {}\n", coeff_list(&we));
            let _ = writeln!(s, "dual (MacWilliams): {via_macwilliams}");
            let _ = writeln!(s, "       coefficients: {}", coeff_list(&via_macwilliams));
            match (&direct, agree) {
                (Some(d), Some(a)) => {
                    let _ = writeln!(s, "dual (enumerated):  {d}");
                    let _ = writeln!(s, "paths agree: {}", if a { "yes" } else { "NO" });
                }
                _ => {
                    let _ = writeln!(
                        s,
                        "dual (enumerated):  skipped, dimension {} above {max_dimension}",
                        n - k
                    );
                }
            }
            s
        }
    };
    Ok(Output { text, ok })
}

pub fn cmd_sets(m: &BitMatrix, oracle: &OracleOptions, format: Format) -> Result<Output, CliError> {
    let opts = OracleOptions {
        collect_sets: true,
        list_limit: oracle.budget,
        ..oracle.clone()
    };
    let c = brute_force_counts(m, &opts)?;
    let one_based = |v: Option<Vec<subrank::SubsetIndex>>| -> Vec<Vec<usize>> {
        v.expect("lists kept up to the budget")
            .iter()
            .map(|s| s.to_one_based())
            .collect()
    };
    let dep = one_based(c.dependent_sets);
    let ind = one_based(c.independent_sets);
    Ok(Output::ok(match format {
        Format::Json => to_json(&json!({
            "n": m.cols(),
            "k": m.rows(),
            "D": c.singular,
            "I": c.full_rank,
            "dependent_sets": dep,
            "independent_sets": ind,
        })),
        Format::Text => {
            let mut s = format!(
                "k = {}, n = {}: D = {}, I = {}\n",
                m.rows(),
                m.cols(),
                c.singular,
                c.full_rank
            );
            render_sets(&mut s, &dep, &ind);
            s
        }
    }))
}

pub fn cmd_search(opts: &SearchOptions, format: Format) -> Result<Output, CliError> {
    let out = search(opts)?;
    Ok(Output::ok(match format {
        Format::Json => to_json(&out),
        Format::Text => render_search(&out),
    }))
}

fn render_search(out: &SearchOutcome) -> String {
    let mut s = format!("search k = {}, n = {} ({}", out.k, out.n, out.strategy);
    if let Some(seed) = out.seed {
        let _ = write!(s, ", seed {seed}");
    }
    let _ = writeln!(s, ", {} candidates)", out.candidates);
    let _ = writeln!(
        s,
        "max I = {}, attained by {} candidates",
        out.max_full_rank, out.attaining
    );
    for (i, w) in out.witnesses.iter().enumerate() {
        let _ = writeln!(s, "witness {}:", i + 1);
        for row in w {
            let _ = writeln!(s, "    {row}");
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
struct Check {
    name: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn check(name: &'static str, pass: bool) -> Check {
    Check {
        name,
        status: if pass { "pass" } else { "fail" },
        detail: None,
    }
}

pub fn cmd_verify(
    g: &BitMatrix,
    parity: Option<&BitMatrix>,
    trials: usize,
    seed: u64,
    oracle: &OracleOptions,
    format: Format,
) -> Result<Output, CliError> {
    let (k, n) = (g.rows(), g.cols());
    let sf = g.systematic_form()?;
    // The computed dual, moved back to the input's column order.
    let h = match parity {
        Some(h) => h.clone(),
        None if k < n => sf.restore_columns(&dual_of(&sf)),
        None => BitMatrix::zeros(0, n),
    };
    let mut checks = Vec::new();

    let orthogonal = if h.rows() == 0 {
        k == n && h.cols() == n
    } else {
        h.cols() == n
            && h.rows() + k == n
            && h.rank() == h.rows()
            && mat_mul_transpose(g, &h).map(|p| p.is_zero()).unwrap_or(false)
    };
    checks.push(check("orthogonal complement (G·Hᵀ = 0, rank H = n-k)", orthogonal));

    let pair = if h.cols() == n && h.rows() + k == n {
        complement_duality_pair_check(g, &h, oracle)?
    } else {
        false
    };
    checks.push(check("complement duality on (G, H)", pair));
    checks.push(check(
        "complement duality on systematic pair",
        complement_duality_check(&sf, oracle)?,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    checks.push(check(
        "row-operation invariance",
        row_op_invariance_check(g, trials, &mut rng, oracle)?,
    ));

    let e = enumerate_side(g, subrank::codes::DEFAULT_MAX_DIMENSION)?;
    if e.condition_holds {
        let opts = AnalyzeOptions {
            oracle: oracle.clone(),
            ..Default::default()
        };
        let agree = match analyze(g, Mode::Both, &opts) {
            Ok(_) => true,
            Err(subrank::Error::Invariant(_)) => false,
            Err(e) => return Err(e.into()),
        };
        checks.push(check("formula agrees with oracle", agree));
    } else {
        checks.push(Check {
            name: "formula agrees with oracle",
            status: "skipped",
            detail: Some("condition 3d*/2 > max(k, n-k) fails".into()),
        });
    }

    let ok = checks.iter().all(|c| c.status != "fail");
    let text = match format {
        Format::Json => to_json(&json!({ "k": k, "n": n, "checks": checks, "passed": ok })),
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = write!(s, "[{}] {}", c.status.to_uppercase(), c.name);
                if let Some(d) = &c.detail {
                    let _ = write!(s, " ({d})");
                }
                s.push('\n');
            }
            let _ = writeln!(s, "{}", if ok { "all checks passed" } else { "verification FAILED" });
            s
        }
    };
    Ok(Output { text, ok })
}
