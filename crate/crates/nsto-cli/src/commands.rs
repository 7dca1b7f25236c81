use clap::{Args, Subcommand, ValueEnum};
use nsto::angular::Convention;
use nsto::assembly::{eri_with, EriOptions, Orbital, RadialMethod};
use nsto::numerics::hyp2f1_unit_a;
use nsto::oracle::{identity_suite_with, quad_radial, QuadSpec};
use nsto::power::{breit_n_with, breit_v, breit_v_quadrature, StepConvention};
use nsto::radial::{
    channel_ladder, compute_helpers, ladder, partner_channel, radial_closed_form, radial_direct_series, Channel,
    ClosedForm, RadialParams, Source,
};
use nsto::{LogScaled, PrecisionConfig};

use crate::table::{Cell, Table};
use crate::timing::{median_ns, WARMUPS};
use crate::{Common, Failure};

/// A finished table plus the failure to report after writing it, if any.
pub struct Outcome {
    pub table: Table,
    pub failure: Option<Failure>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Outcome {
        Outcome { table, failure: None }
    }
}

pub fn config(common: &Common) -> Result<PrecisionConfig, Failure> {
    let mut cfg = PrecisionConfig::default();
    if let Some(tol) = common.tol {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Failure::bad_args(format!("--tol must lie in (0, 1), got {tol}")));
        }
        cfg.ladder_rel_tol = tol;
        cfg.quad_rel_tol = tol;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn method_or<'a>(common: &'a Common, default: &'a str, allowed: &[&str]) -> Result<&'a str, Failure> {
    let m = common.method.as_deref().unwrap_or(default);
    if allowed.contains(&m) {
        Ok(m)
    } else {
        Err(Failure::bad_args(format!("--method {m} is not one of {}", allowed.join(", "))))
    }
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: f64,
    #[arg(long)]
    pub nprime: f64,
    #[arg(long)]
    pub zeta: f64,
    #[arg(long)]
    pub zetaprime: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<RadialParams, Failure> {
        Ok(RadialParams::new(self.n, self.nprime, self.zeta, self.zetaprime)?)
    }
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Seed => "seed",
        Source::Forward => "forward",
        Source::Backward => "backward",
        Source::Series => "series",
    }
}

#[derive(Debug, Args)]
pub struct RadialArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10)]
    pub l_max: u32,
    /// Timed repetitions per row (median reported).
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
}

const RADIAL_METHODS: [&str; 7] = ["ladder", "series", "closed25", "closed26", "closed27", "closed28", "quadrature"];

pub fn radial(a: &RadialArgs, common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    let p = a.params.params()?;
    let method = method_or(common, "ladder", &RADIAL_METHODS)?;
    let mut table = Table::new(&["L", "R", "method", "elapsed_ns", "note"]);
    let mut failed = 0;
    let full = if method == "ladder" { Some(ladder(&p, a.l_max, cfg)?) } else { None };
    for l in 0..=a.l_max {
        let (value, elapsed, note) = match method {
            "ladder" => {
                let t = full.as_ref().expect("ladder table");
                let note = t
                    .report
                    .fallbacks
                    .iter()
                    .filter(|(at, _)| *at == l)
                    .map(|(_, e)| format!("series fallback: {e}"))
                    .collect::<Vec<_>>()
                    .join("; ");
                let ns = median_ns(WARMUPS, a.reps, || ladder(&p, l, cfg));
                (Ok(t.r[l as usize]), ns, note)
            }
            "series" => {
                let ns = median_ns(WARMUPS, a.reps, || radial_direct_series(&p, l, cfg));
                (radial_direct_series(&p, l, cfg), ns, String::new())
            }
            "quadrature" => {
                // too slow to repeat; one timed run
                let spec = QuadSpec::from_config(cfg);
                let start = std::time::Instant::now();
                let q = quad_radial(&p, l, l as f64 + 1.0, false, &spec);
                let ns = start.elapsed().as_nanos() as u64;
                let note = q.as_ref().map(|q| format!("rel_error {:.3e}", q.rel_error)).unwrap_or_default();
                (q.map(|q| q.value), ns, note)
            }
            closed => {
                let label: u32 = closed["closed".len()..].parse().expect("validated name");
                let variant = ClosedForm::from_label(label).expect("validated label");
                let ns = median_ns(WARMUPS, a.reps, || radial_closed_form(&p, l, variant, cfg));
                (radial_closed_form(&p, l, variant, cfg), ns, String::new())
            }
        };
        let (cell, note) = match value {
            Ok(v) => (Cell::from(v), note),
            Err(e) => {
                failed += 1;
                (Cell::Empty, e.to_string())
            }
        };
        table.push(vec![Cell::Int(l as i64), cell, Cell::Text(method.into()), Cell::Int(elapsed as i64), Cell::Text(note)]);
    }
    let failure = (failed == table.rows.len()).then(|| Failure::numerical("every row failed"));
    Ok(Outcome { table, failure })
}

#[derive(Debug, Args)]
pub struct HypTableArgs {
    #[arg(long, requires_all = ["nprime", "zeta", "zetaprime"], conflicts_with_all = ["b", "c0", "z"])]
    pub n: Option<f64>,
    #[arg(long)]
    pub nprime: Option<f64>,
    #[arg(long)]
    pub zeta: Option<f64>,
    #[arg(long)]
    pub zetaprime: Option<f64>,
    /// Upper parameter, with `--c0` and `--z` instead of orbital parameters.
    #[arg(long, requires_all = ["c0", "z"])]
    pub b: Option<f64>,
    #[arg(long)]
    pub c0: Option<f64>,
    #[arg(long)]
    pub z: Option<f64>,
    #[arg(long, default_value_t = 10)]
    pub l_max: u32,
}

/// Rows of `₂F₁(1, b; c0+L; z)`.
///
/// With orbital parameters the family is `b = n+n'+1`, `c0 = n'+2`,
/// `z = ζ'/(ζ+ζ')`, and a third column unwraps it again from the ladder's
/// `R^L` through `e`, `h¹` and `m`.
pub fn hyp_table(a: &HypTableArgs, _common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    let mut table = Table::new(&["L", "series", "ladder", "unwrapped", "ladder_source", "note"]);
    if let (Some(n), Some(np), Some(zeta), Some(zetap)) = (a.n, a.nprime, a.zeta, a.zetaprime) {
        let p = RadialParams::new(n, np, zeta, zetap)?;
        let t = ladder(&p, a.l_max, cfg)?;
        for l in 0..=a.l_max {
            let i = l as usize;
            let mut notes = Vec::new();
            let series = partner_channel(&p, l, cfg).map(Cell::from).unwrap_or_else(|e| {
                notes.push(format!("series: {e}"));
                Cell::Empty
            });
            let unwrapped = compute_helpers(&p, l, cfg)
                .and_then(|h| {
                    (t.r[i] + h.m).checked_div(h.e * h.h1).ok_or(nsto::Error::Pole { what: "e h", at: 0.0 })
                })
                .map(Cell::from)
                .unwrap_or_else(|e| {
                    notes.push(format!("unwrapped: {e}"));
                    Cell::Empty
                });
            table.push(vec![
                Cell::Int(l as i64),
                series,
                Cell::from(t.frak_r[i]),
                unwrapped,
                Cell::Text(source_name(t.frak_sources[i]).into()),
                Cell::Text(notes.join("; ")),
            ]);
        }
        return Ok(table.into());
    }
    let (Some(b), Some(c0), Some(z)) = (a.b, a.c0, a.z) else {
        return Err(Failure::bad_args("give either --n/--nprime/--zeta/--zetaprime or --b/--c0/--z"));
    };
    if !(0.0..1.0).contains(&z) || !(c0 > 0.0) || !b.is_finite() {
        return Err(Failure::bad_args(format!("need 0 <= z < 1 and c0 > 0, got z={z} c0={c0}")));
    }
    let ch = Channel { n: c0 - 2.0, nprime: b - c0 + 1.0, z, zp: 1.0 - z };
    let t = if z == 0.0 {
        None
    } else {
        Some(channel_ladder(&ch, a.l_max, cfg)?)
    };
    for l in 0..=a.l_max {
        let i = l as usize;
        let series = hyp2f1_unit_a(b, c0 + l as f64, z, cfg)?;
        let (lad, src) = match &t {
            Some(t) => (t.values[i], source_name(t.sources[i])),
            None => (LogScaled::ONE, "seed"),
        };
        table.push(vec![
            Cell::Int(l as i64),
            Cell::from(series),
            Cell::from(lad),
            Cell::Empty,
            Cell::Text(src.into()),
            Cell::Text(String::new()),
        ]);
    }
    Ok(table.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Complex,
    Real,
}

fn parse_orbital(s: &str) -> Result<(f64, i32, i32, f64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected n,l,m,zeta, got {s:?}"));
    }
    let num = |x: &str| x.parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    let int = |x: &str| x.parse::<i32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(parts[0])?, int(parts[1])?, int(parts[2])?, num(parts[3])?))
}

#[derive(Debug, Args)]
pub struct EriArgs {
    /// Electron-1 bra orbital as `n,l,m,zeta`.
    #[arg(long, value_parser = parse_orbital, allow_hyphen_values = true)]
    pub o1: (f64, i32, i32, f64),
    /// Electron-1 ket orbital.
    #[arg(long, value_parser = parse_orbital, allow_hyphen_values = true)]
    pub o1p: (f64, i32, i32, f64),
    /// Electron-2 orbital paired with `--o1`.
    #[arg(long, value_parser = parse_orbital, allow_hyphen_values = true)]
    pub o2: (f64, i32, i32, f64),
    #[arg(long, value_parser = parse_orbital, allow_hyphen_values = true)]
    pub o2p: (f64, i32, i32, f64),
    #[arg(long, value_enum, default_value_t = ConventionArg::Complex)]
    pub convention: ConventionArg,
}

pub fn eri(a: &EriArgs, common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    let method = method_or(common, "ladder", &["ladder", "series"])?;
    let orb = |o: (f64, i32, i32, f64)| Orbital::new(o.0, o.1, o.2, o.3);
    let (o1, o1p, o2, o2p) = (orb(a.o1)?, orb(a.o1p)?, orb(a.o2)?, orb(a.o2p)?);
    let opts = EriOptions {
        convention: match a.convention {
            ConventionArg::Complex => Convention::Complex,
            ConventionArg::Real => Convention::Real,
        },
        method: if method == "series" { RadialMethod::Series } else { RadialMethod::Ladder },
    };
    let j = eri_with(&o1, &o1p, &o2, &o2p, opts, cfg)?;
    let ns = median_ns(WARMUPS, 5, || eri_with(&o1, &o1p, &o2, &o2p, opts, cfg));
    let mut table = Table::new(&["J", "method", "convention", "elapsed_ns"]);
    let conv = match a.convention {
        ConventionArg::Complex => "complex",
        ConventionArg::Real => "real",
    };
    table.push(vec![Cell::from(j), Cell::Text(method.into()), Cell::Text(conv.into()), Cell::Int(ns as i64)]);
    Ok(table.into())
}

#[derive(Debug, Args)]
pub struct BreitArgs {
    #[command(subcommand)]
    pub kind: BreitKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StepArg {
    /// Step at `r₁ > r₂`.
    Positive,
    /// Step at `r₁ > r₂ + 1`.
    Shifted,
}

#[derive(Debug, Subcommand)]
pub enum BreitKind {
    /// `N^L`: kernel `r<^L / r>^{L+3}` over `r₁ > r₂`.
    N {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        l_max: u32,
        #[arg(long, value_enum, default_value_t = StepArg::Positive)]
        step: StepArg,
    },
    /// `V^L`: full range, electron 1 carrying a differentiated orbital.
    V {
        #[arg(long)]
        n1: f64,
        #[arg(long)]
        n1p: f64,
        #[arg(long)]
        zeta1: f64,
        #[arg(long)]
        zeta1p: f64,
        #[arg(long)]
        n2: f64,
        #[arg(long)]
        zeta2: f64,
        #[arg(long, default_value_t = 0)]
        l_max: u32,
    },
}

pub fn breit(a: &BreitArgs, common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    let method = method_or(common, "closed", &["closed", "quadrature"])?;
    let spec = QuadSpec::from_config(cfg);
    let mut table = Table::new(&["kind", "L", "value", "method"]);
    match &a.kind {
        BreitKind::N { params, l_max, step } => {
            let p = params.params()?;
            for l in 0..=*l_max {
                let (v, label) = match (step, method) {
                    (StepArg::Shifted, _) => {
                        (breit_n_with(p.n, p.nprime, p.zeta, p.zetaprime, l, StepConvention::ShiftedByOne, cfg)?, "quadrature")
                    }
                    (StepArg::Positive, "quadrature") => {
                        (quad_radial(&p, l, l as f64 + 3.0, true, &spec)?.value, "quadrature")
                    }
                    _ => (breit_n_with(p.n, p.nprime, p.zeta, p.zetaprime, l, StepConvention::Positive, cfg)?, "closed"),
                };
                table.push(vec![Cell::Text("N".into()), Cell::Int(l as i64), Cell::from(v), Cell::Text(label.into())]);
            }
        }
        BreitKind::V { n1, n1p, zeta1, zeta1p, n2, zeta2, l_max } => {
            for l in 0..=*l_max {
                let v = if method == "quadrature" {
                    breit_v_quadrature(*n1, *n1p, *zeta1, *zeta1p, *n2, *zeta2, l, &spec)?
                } else {
                    breit_v(*n1, *n1p, *zeta1, *zeta1p, *n2, *zeta2, l, cfg)?
                };
                table.push(vec![Cell::Text("V".into()), Cell::Int(l as i64), Cell::from(v), Cell::Text(method.into())]);
            }
        }
    }
    Ok(table.into())
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 99.5)]
    pub n: f64,
    #[arg(long, default_value_t = 99.51)]
    pub nprime: f64,
    #[arg(long, default_value_t = 1.1)]
    pub zeta: f64,
    #[arg(long, default_value_t = 1.2)]
    pub zetaprime: f64,
    #[arg(long, default_value_t = 100)]
    pub l_max: u32,
    /// Timed repetitions per row; at least 10.
    #[arg(long, default_value_t = 30)]
    pub reps: usize,
}

/// Time to produce every `R^L` up to `l_max` by each route, as median
/// nanoseconds over `reps`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub l: u32,
    pub series_ns: u64,
    pub ladder_ns: u64,
}

pub fn bench_rows(p: &RadialParams, l_max: u32, reps: usize, cfg: &PrecisionConfig) -> nsto::Result<Vec<BenchRow>> {
    // surface numerical failures before any timing
    ladder(p, l_max, cfg)?;
    for l in 0..=l_max {
        radial_direct_series(p, l, cfg)?;
    }
    let mut rows = Vec::with_capacity(l_max as usize + 1);
    for l in 0..=l_max {
        let series_ns = median_ns(WARMUPS, reps, || {
            (0..=l).map(|k| radial_direct_series(p, k, cfg).map(|v| v.log_mag()).unwrap_or(0.0)).sum::<f64>()
        });
        let ladder_ns = median_ns(WARMUPS, reps, || ladder(p, l, cfg));
        rows.push(BenchRow { l, series_ns, ladder_ns });
    }
    Ok(rows)
}

pub fn bench(a: &BenchArgs, _common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    if a.reps < 10 {
        return Err(Failure::bad_args(format!("--reps must be at least 10, got {}", a.reps)));
    }
    let p = RadialParams::new(a.n, a.nprime, a.zeta, a.zetaprime)?;
    let mut table = Table::new(&["L", "t_series_ns", "t_ladder_ns"]);
    for r in bench_rows(&p, a.l_max, a.reps, cfg)? {
        table.push(vec![Cell::Int(r.l as i64), Cell::Int(r.series_ns as i64), Cell::Int(r.ladder_ns as i64)]);
    }
    Ok(table.into())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Random draws per identity.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

pub fn verify(a: &VerifyArgs, common: &Common, cfg: &PrecisionConfig) -> Result<Outcome, Failure> {
    let report = identity_suite_with(a.samples, common.seed, cfg);
    let mut table = Table::new(&["identity", "samples", "max_rel_dev", "pass"]);
    for row in &report.rows {
        table.push(vec![
            Cell::Text(row.name.into()),
            Cell::Int(row.samples as i64),
            Cell::from(row.max_rel_dev),
            Cell::Bool(row.pass),
        ]);
    }
    let failure = (!report.all_pass()).then(|| Failure::numerical("identity check failed"));
    Ok(Outcome { table, failure })
}
