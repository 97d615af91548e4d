//! Command-line front end: bound evaluation, BG checks, wall geometry,
//! derivation pipelines, figure emission, and wall scans. Every command
//! prints one CommandResult JSON document; the exit code is 0 for
//! ok/true, 1 for violated/false, 2 for usage or domain errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::Rational;
use crate::bounds::{
    self, boundary_conditions, chain_check, check_restriction_hypotheses, derive_xi,
    reflection_identity, star_shaped, BoundFunction,
};
use crate::chern::{delta_bar, NumChern};
use crate::error::{Error, Result};
use crate::figures::{figure_csv, figure_svg};
use crate::geometry::{euler_pairing, grr_pushforward, LatticeChern, SurfaceLattice};
use crate::tilt::{
    alpha_mu, bg3_quadratic, bg_classical_check, bg_tilt_check, check_first_wall_bound,
    enumerate_candidate_walls, wall_between, wall_endpoints, wall_width, Region, TiltPoint,
    WallBoundary,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violated,
    Error,
}

/// The single output document every subcommand prints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: serde_json::Value,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "tiltbg",
    about = "Exact-arithmetic calculator for tilt-stability walls and \
             Bogomolov-Gieseker-type inequalities on P^3 and hypersurfaces",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundName {
    Theta,
    Gamma,
    Xi,
    #[value(name = "gamma_small", alias = "gamma-small")]
    GammaSmall,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BgForm {
    Classical,
    Tilt,
    Bg3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Boundary {
    Parabola,
    Theta,
}

impl From<Boundary> for WallBoundary {
    fn from(b: Boundary) -> Self {
        match b {
            Boundary::Parabola => WallBoundary::Parabola,
            Boundary::Theta => WallBoundary::ThetaCurve,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one of the bound functions at an exact rational point
    EvalBound {
        #[arg(value_enum)]
        name: BoundName,
        #[arg(allow_hyphen_values = true)]
        t: Rational,
    },
    /// Check a BG-type inequality for a character given as JSON
    CheckBg {
        /// Character JSON; read from stdin when omitted
        #[arg(long)]
        character: Option<String>,
        #[arg(long, value_enum)]
        form: BgForm,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Rational>,
    },
    /// Wall between two characters, with endpoints on a boundary curve
    Wall {
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value = "parabola")]
        boundary: Boundary,
    },
    /// Re-derive the hypersurface bound at one slope or on a grid
    DeriveXi {
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<Rational>,
        /// Evaluate on the grid mu = j/(2k) for j = 0..k
        #[arg(long)]
        grid: Option<i64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit a figure as exact CSV and/or SVG
    Figures {
        #[arg(long)]
        which: u8,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// Enumerate candidate walls for a character over a beta-interval
    Scan {
        #[arg(long)]
        v: String,
        #[arg(long)]
        rank_bound: i64,
        #[arg(long, allow_hyphen_values = true)]
        beta_min: Rational,
        #[arg(long, allow_hyphen_values = true)]
        beta_max: Rational,
        /// Degree for the first-wall width verdicts
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "theta")]
        boundary: Boundary,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Pushforward of a surface character (r, a, b) to P^3
    Pushforward {
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: Rational,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
    },
    /// The restriction-line intercept alpha_mu
    AlphaMu {
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        mu: Rational,
    },
    /// Euler pairing of two surface characters over a lattice file
    Chi {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Star-shapedness certificate for a bound function
    StarShaped {
        /// theta, xi, or a path to a BoundFunction JSON file
        #[arg(long)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        d: Rational,
    },
    /// The full restriction-lemma hypothesis bundle
    CheckRestrictionHypotheses {
        #[arg(long)]
        f: String,
        #[arg(long)]
        d: i64,
    },
}

/// Parse arguments and execute; returns the result document to print.
/// Argument or domain errors come back as a CommandResult with status
/// `error` so the caller exits 2.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    return CommandResult {
                        status: Status::Ok,
                        payload: json!({"message": e.to_string()}),
                    }
                }
                _ => Status::Error,
            };
            return CommandResult {
                status: code,
                payload: json!({"message": e.to_string()}),
            };
        }
    };
    match execute(cli.command) {
        Ok(result) => result,
        Err(e) => CommandResult {
            status: Status::Error,
            payload: json!({"message": e.to_string()}),
        },
    }
}

fn parse_character(text: &str) -> Result<NumChern> {
    serde_json::from_str(text)
        .map_err(|e| Error::ParseError(format!("bad character JSON: {e}")))
}

fn parse_lattice_chern(text: &str) -> Result<LatticeChern> {
    serde_json::from_str(text)
        .map_err(|e| Error::ParseError(format!("bad surface character JSON: {e}")))
}

fn read_stdin() -> Result<String> {
    use std::io::Read;
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::ParseError(format!("stdin: {e}")))?;
    Ok(buf)
}

fn named_bound(name: &str) -> Result<BoundFunction> {
    match name {
        "theta" => Ok(bounds::theta_bound()),
        "xi" => Ok(bounds::xi_bound()),
        "gamma" => Ok(bounds::gamma_bound()),
        "gamma_small" => Ok(bounds::gamma_small_bound()),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::ParseError(format!("cannot read {path}: {e}")))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::ParseError(format!("bad bound function JSON: {e}")))
        }
    }
}

fn with_pool<F: FnOnce() -> Result<CommandResult> + Send>(
    jobs: usize,
    f: F,
) -> Result<CommandResult>
where
    CommandResult: Send,
{
    if jobs == 0 {
        return Err(Error::DomainError("jobs must be >= 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::DomainError(format!("thread pool: {e}")))?;
    pool.install(f)
}

fn execute(cmd: Command) -> Result<CommandResult> {
    match cmd {
        Command::EvalBound { name, t } => {
            let value = match name {
                BoundName::Theta => bounds::theta(&t),
                BoundName::Gamma => bounds::gamma_fn(&t)?,
                BoundName::Xi => bounds::xi(&t)?,
                BoundName::GammaSmall => bounds::gamma_small(&t),
            };
            Ok(CommandResult {
                status: Status::Ok,
                payload: json!({"t": t, "value": value}),
            })
        }
        Command::CheckBg { character, form, beta, alpha } => {
            let text = match character {
                Some(t) => t,
                None => read_stdin()?,
            };
            let v = parse_character(&text)?;
            let (holds, payload) = match form {
                BgForm::Classical => {
                    let db = delta_bar(&v);
                    (bg_classical_check(&v, None)?, json!({"delta_bar": db}))
                }
                BgForm::Tilt => {
                    let db = delta_bar(&v);
                    (bg_tilt_check(&v), json!({"delta_bar": db}))
                }
                BgForm::Bg3 => {
                    let beta = beta.ok_or_else(|| {
                        Error::DomainError("--beta required for the bg3 form".into())
                    })?;
                    let alpha = alpha.ok_or_else(|| {
                        Error::DomainError("--alpha required for the bg3 form".into())
                    })?;
                    TiltPoint::new(beta.clone(), alpha.clone(), Region::Parabola)?;
                    let q = bg3_quadratic(&v, &beta, &alpha)?;
                    (!q.is_negative(), json!({"q": q, "beta": beta, "alpha": alpha}))
                }
            };
            Ok(CommandResult {
                status: if holds { Status::Ok } else { Status::Violated },
                payload,
            })
        }
        Command::Wall { v, w, boundary } => {
            let v = parse_character(&v)?;
            let w = parse_character(&w)?;
            match wall_between(&v, &w)? {
                None => Ok(CommandResult {
                    status: Status::Ok,
                    payload: json!({"wall": "no-wall"}),
                }),
                Some(wall) => {
                    let ep = wall_endpoints(&wall, boundary.into())?;
                    Ok(CommandResult {
                        status: Status::Ok,
                        payload: json!({
                            "wall": wall,
                            "endpoints": ep,
                        }),
                    })
                }
            }
        }
        Command::DeriveXi { d, mu, grid, jobs } => match (mu, grid) {
            (Some(mu), None) => {
                let value = derive_xi(d, &mu)?;
                Ok(CommandResult {
                    status: Status::Ok,
                    payload: json!({"d": d, "mu": mu, "value": value}),
                })
            }
            (None, Some(k)) => {
                if k < 1 {
                    return Err(Error::DomainError(format!("grid size {k} must be >= 1")));
                }
                with_pool(jobs, || {
                    use rayon::prelude::*;
                    let rows: Vec<serde_json::Value> = (0..=k)
                        .into_par_iter()
                        .map(|j| {
                            let mu = Rational::new(j, 2 * k);
                            derive_xi(d, &mu).map(|v| json!({"mu": mu, "value": v}))
                        })
                        .collect::<Result<_>>()?;
                    Ok(CommandResult {
                        status: Status::Ok,
                        payload: json!({"d": d, "rows": rows}),
                    })
                })
            }
            _ => Err(Error::DomainError(
                "exactly one of --mu and --grid is required".into(),
            )),
        },
        Command::Figures { which, csv, svg, samples } => {
            if csv.is_none() && svg.is_none() {
                return Err(Error::DomainError(
                    "at least one of --csv and --svg is required".into(),
                ));
            }
            let mut written = Vec::new();
            if let Some(path) = csv {
                let data = figure_csv(which, samples)?;
                std::fs::write(&path, data)
                    .map_err(|e| Error::DomainError(format!("write {}: {e}", path.display())))?;
                written.push(path.display().to_string());
            }
            if let Some(path) = svg {
                let data = figure_svg(which, samples)?;
                std::fs::write(&path, data)
                    .map_err(|e| Error::DomainError(format!("write {}: {e}", path.display())))?;
                written.push(path.display().to_string());
            }
            Ok(CommandResult {
                status: Status::Ok,
                payload: json!({"which": which, "written": written}),
            })
        }
        Command::Scan { v, rank_bound, beta_min, beta_max, d, boundary, jobs } => {
            let v = parse_character(&v)?;
            with_pool(jobs, || {
                let walls = enumerate_candidate_walls(&v, rank_bound, &beta_min, &beta_max)?;
                let mut rows = Vec::new();
                let mut any_violation = false;
                for (w, wall) in &walls {
                    let ep = wall_endpoints(wall, boundary.into())?;
                    let mut row = json!({
                        "w": w,
                        "wall": wall,
                        "endpoints": ep,
                    });
                    if let Some(ep) = &ep {
                        let width = wall_width(ep)?;
                        let straddles = ep.0.beta.sign() < 0 && ep.1.beta.sign() > 0;
                        row["width"] = json!(width);
                        row["straddles_zero"] = json!(straddles);
                        if straddles {
                            let ok = check_first_wall_bound(ep, d)?;
                            row["width_within_degree"] = json!(ok);
                            if !ok {
                                any_violation = true;
                            }
                        }
                    }
                    rows.push(row);
                }
                Ok(CommandResult {
                    status: if any_violation { Status::Violated } else { Status::Ok },
                    payload: json!({
                        "degree": d,
                        "walls": rows,
                    }),
                })
            })
        }
        Command::Pushforward { d, r, a, b } => {
            let v = grr_pushforward(d, &r, &a, &b)?;
            Ok(CommandResult {
                status: Status::Ok,
                payload: json!({"character": v}),
            })
        }
        Command::AlphaMu { d, mu } => {
            let value = alpha_mu(d, &mu)?;
            Ok(CommandResult {
                status: Status::Ok,
                payload: json!({"d": d, "mu": mu, "value": value}),
            })
        }
        Command::Chi { lattice, v, w } => {
            let text = std::fs::read_to_string(&lattice)
                .map_err(|e| Error::ParseError(format!("cannot read {}: {e}", lattice.display())))?;
            let lattice = SurfaceLattice::from_text(&text)?;
            let v = parse_lattice_chern(&v)?;
            let w = parse_lattice_chern(&w)?;
            let chi = euler_pairing(&lattice, &v, &w)?;
            Ok(CommandResult {
                status: Status::Ok,
                payload: json!({"chi": chi}),
            })
        }
        Command::StarShaped { f, d } => {
            let f = named_bound(&f)?;
            let cert = star_shaped(&f, &d)?;
            Ok(CommandResult {
                status: if cert.holds { Status::Ok } else { Status::Violated },
                payload: serde_json::to_value(&cert)
                    .map_err(|e| Error::ParseError(e.to_string()))?,
            })
        }
        Command::CheckRestrictionHypotheses { f, d } => {
            let f = named_bound(&f)?;
            let report = check_restriction_hypotheses(&f, d)?;
            let extra = json!({
                "chain": chain_check(&f, d)?,
                "boundary": boundary_conditions(&f)?,
                "reflection": reflection_identity(&f)?,
            });
            let all = report.all_hold();
            let mut payload = serde_json::to_value(&report)
                .map_err(|e| Error::ParseError(e.to_string()))?;
            payload["details"] = extra;
            Ok(CommandResult {
                status: if all { Status::Ok } else { Status::Violated },
                payload,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> CommandResult {
        let mut full = vec!["tiltbg"];
        full.extend_from_slice(args);
        run(full)
    }

    #[test]
    fn eval_bound_examples() {
        let r = run_cli(&["eval-bound", "theta", "1/2"]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["value"], "-1/8");
        let r = run_cli(&["eval-bound", "xi", "0"]);
        assert_eq!(r.payload["value"], "0");
        let r = run_cli(&["eval-bound", "xi", "1/2"]);
        assert_eq!(r.payload["value"], "1/24");
        // out of domain
        let r = run_cli(&["eval-bound", "xi", "3/2"]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn check_bg_forms() {
        let o2 = serde_json::to_string(&NumChern::line_bundle_p3(2)).unwrap();
        let r = run_cli(&[
            "check-bg", "--character", &o2, "--form", "bg3", "--beta", "0", "--alpha", "1",
        ]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["q"], "0");
        let bad = r#"{"variety":{"kind":"proj_space3"},"s":["1","0","1","0"]}"#;
        let r = run_cli(&["check-bg", "--character", bad, "--form", "tilt"]);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.payload["delta_bar"], "-2");
        let sheet = r#"{"variety":{"kind":"proj_space3"},"s":["0","1","-1/2","1/6"]}"#;
        let r = run_cli(&[
            "check-bg", "--character", sheet, "--form", "bg3", "--beta", "0", "--alpha", "1",
        ]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["q"], "2");
        // bg3 point must be above the parabola
        let r = run_cli(&[
            "check-bg", "--character", &o2, "--form", "bg3", "--beta", "2", "--alpha", "0",
        ]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn wall_command() {
        let o = serde_json::to_string(&NumChern::line_bundle_p3(0)).unwrap();
        let om1 = serde_json::to_string(&NumChern::line_bundle_p3(-1)).unwrap();
        let r = run_cli(&["wall", "--v", &o, "--w", &om1]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["wall"]["slope"], "-1/2");
        let eps = &r.payload["endpoints"];
        assert_eq!(eps[0]["beta"], "-1");
        assert_eq!(eps[1]["beta"], "0");
        // proportional characters: no wall
        let r = run_cli(&["wall", "--v", &o, "--w", &o]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["wall"], "no-wall");
        // surd endpoints round-trip through the payload
        let flat_v = r#"{"variety":{"kind":"proj_space3"},"s":["2","0","1/2","0"]}"#;
        let flat_w = r#"{"variety":{"kind":"proj_space3"},"s":["0","1","0","0"]}"#;
        let r = run_cli(&["wall", "--v", flat_v, "--w", flat_w]);
        assert_eq!(r.exit_code(), 0);
        let beta = r.payload["endpoints"][1]["beta"].as_str().unwrap();
        assert!(beta.contains("sqrt(2)"), "got {beta}");
    }

    #[test]
    fn derive_xi_command() {
        let r = run_cli(&["derive-xi", "--d", "3", "--mu", "1/2"]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["value"], "1/24");
        let r = run_cli(&["derive-xi", "--d", "1", "--grid", "4"]);
        assert_eq!(r.exit_code(), 0);
        let rows = r.payload["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[2]["mu"], "1/4");
        assert_eq!(rows[2]["value"], "0");
        let r = run_cli(&["derive-xi", "--d", "0", "--mu", "1/4"]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn alpha_mu_and_pushforward() {
        let r = run_cli(&["alpha-mu", "--d", "4", "--mu", "1/2"]);
        assert_eq!(r.payload["value"], "5/8");
        let r = run_cli(&[
            "pushforward", "--d", "2", "--r", "1", "--a", "0", "--b", "0",
        ]);
        assert_eq!(r.exit_code(), 0);
        let s = &r.payload["character"]["s"];
        assert_eq!(s[1], "2");
        assert_eq!(s[2], "-2");
        // payload round-trips into the parser
        let back: NumChern =
            serde_json::from_value(r.payload["character"].clone()).unwrap();
        assert_eq!(back.s()[3], crate::arith::rat(4, 3));
    }

    #[test]
    fn star_shaped_and_restriction() {
        let r = run_cli(&["star-shaped", "--f", "theta", "--d", "2"]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["holds"], true);
        assert_eq!(r.payload["sound"], true);
        let r = run_cli(&["check-restriction-hypotheses", "--f", "xi", "--d", "1"]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["details"]["reflection"], true);
        let r = run_cli(&["star-shaped", "--f", "nosuchfile.json", "--d", "1"]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn scan_command() {
        let v = r#"{"variety":{"kind":"proj_space3"},"s":["0","2","-2","4/3"]}"#;
        let r = run_cli(&[
            "scan", "--v", v, "--rank-bound", "2", "--beta-min", "-2", "--beta-max", "0",
            "--d", "2",
        ]);
        assert_eq!(r.exit_code(), 0);
        let walls = r.payload["walls"].as_array().unwrap();
        assert!(walls
            .iter()
            .any(|row| row["wall"]["slope"] == "-1" && row["wall"]["intercept"] == "-1/2"));
        // determinism across worker counts
        let run_jobs = |jobs: &str| {
            serde_json::to_string(
                &run_cli(&[
                    "scan", "--v", v, "--rank-bound", "2", "--beta-min", "-2",
                    "--beta-max", "0", "--d", "2", "--jobs", jobs,
                ])
                .payload,
            )
            .unwrap()
        };
        assert_eq!(run_jobs("1"), run_jobs("8"));
        // negative discriminant and bad rank bound are usage errors
        let bad = r#"{"variety":{"kind":"proj_space3"},"s":["1","0","1","0"]}"#;
        let r = run_cli(&[
            "scan", "--v", bad, "--rank-bound", "2", "--beta-min", "-1", "--beta-max", "1",
            "--d", "2",
        ]);
        assert_eq!(r.exit_code(), 2);
        let r = run_cli(&[
            "scan", "--v", v, "--rank-bound", "0", "--beta-min", "-1", "--beta-max", "1",
            "--d", "2",
        ]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn figures_command() {
        let dir = tempfile::tempdir().unwrap();
        let csv = dir.path().join("fig1.csv");
        let svg = dir.path().join("fig1.svg");
        let r = run_cli(&[
            "figures", "--which", "1",
            "--csv", csv.to_str().unwrap(),
            "--svg", svg.to_str().unwrap(),
            "--samples", "9",
        ]);
        assert_eq!(r.exit_code(), 0);
        let data = std::fs::read_to_string(&csv).unwrap();
        assert!(data.contains("1/2,-1/8,1/8"));
        assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
        // unwritable path
        let r = run_cli(&[
            "figures", "--which", "1", "--csv", "/nonexistent-dir/fig.csv",
        ]);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn chi_command() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("quartic.lattice");
        std::fs::write(&path, SurfaceLattice::hypersurface_rank1(4).unwrap().to_text())
            .unwrap();
        let v = r#"{"r":"2","c1":["1"],"ch2":"-1"}"#;
        let r = run_cli(&["chi", "--lattice", path.to_str().unwrap(), "--v", v, "--w", v]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload["chi"], "0");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_cli(&["no-such-command"]).exit_code(), 2);
        assert_eq!(run_cli(&["eval-bound", "theta", "not-a-number"]).exit_code(), 2);
        assert_eq!(run_cli(&["derive-xi", "--d", "2"]).exit_code(), 2);
    }

    #[test]
    fn command_result_round_trip() {
        let r = run_cli(&["eval-bound", "theta", "1/2"]);
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: CommandResult = serde_json::from_str(&text).unwrap();
        assert_eq!(back.exit_code(), 0);
        assert_eq!(back.payload, r.payload);
    }
}
