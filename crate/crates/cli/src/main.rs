//! Command-line front end: compute the information measures for one state,
//! reproduce the reference Fisher/Shannon tables, emit complexity curves
//! along one quantum-number axis, check the uncertainty-type bounds over
//! the whole reference state set, and dump momentum-density grids.
//!
//! All CSV output is deterministic: fixed row order, fixed 9-significant-
//! digit float formatting, and a `#`-prefixed metadata header carrying the
//! potential form, the quadrature tolerance, and an FNV-1a hash of the four
//! unit-conversion constants so downstream users can tell at a glance which
//! constants ledger produced a file.
//!
//! Exit codes: 0 — success; 1 — at least one bound violation (`verify`);
//! 2 — invalid input (unknown molecule, malformed state, unreadable file).

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use clap::{Parser, Subcommand, ValueEnum};

use kratzer_info::infomeasures::{
    check_bounds, complexity, measure_set, MeasureSet, ENTROPY_SUM_BOUND,
};
use kratzer_info::kratzer::{BoundState, QuantumState};
use kratzer_info::molparams::{
    builtin_molecules, find, parse_molecule_file, MoleculeRecord, PotentialForm,
    BOHR_PER_ANGSTROM, GRAM_PER_AMU, HARTREE_PER_INVCM, ME_PER_AMU,
};
use kratzer_info::pspace::{momentum_density_grid, MomentumDensity};

const MOLECULE_FILE_ENV: &str = "KRATZER_INFO_MOLECULES";

#[derive(Parser)]
#[command(
    name = "kratzer-info",
    version,
    about = "Information measures for diatomic molecules in a generalized Kratzer potential"
)]
struct Cli {
    /// Molecule constants file replacing the bundled table (this flag
    /// overrides the KRATZER_INFO_MOLECULES environment variable).
    #[arg(long, global = true, value_name = "FILE")]
    molecule_file: Option<PathBuf>,

    /// Potential form: the two differ only by the energy offset z.
    #[arg(long, global = true, value_enum, default_value = "mie")]
    form: FormArg,

    /// Absolute tolerance for the position-space quadratures (momentum
    /// grids use their own fixed convergence thresholds).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormArg {
    /// z = D0: dissociation limit at zero energy.
    Mie,
    /// z = 0: minimum of the well at -D0.
    KratzerFues,
}

impl From<FormArg> for PotentialForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Mie => PotentialForm::Mie,
            FormArg::KratzerFues => PotentialForm::KratzerFues,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Axis {
    N,
    L,
    M,
}

impl Axis {
    fn label(self) -> &'static str {
        match self {
            Axis::N => "vary-n",
            Axis::L => "vary-l",
            Axis::M => "vary-m",
        }
    }

    /// Quantum numbers of row `i` of this family. The fixed indices follow
    /// the reference tables: l = m = 0 when n varies, n = 5 and m = 0 when
    /// l varies, n = l = 5 when m varies.
    fn state(self, i: u32) -> (u32, u32, i32) {
        match self {
            Axis::N => (i, 0, 0),
            Axis::L => (5, i, 0),
            Axis::M => (5, 5, i as i32),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Full measure set for one state (one CSV row per molecule).
    Measures {
        /// Molecule name; default is every molecule in the table.
        #[arg(long)]
        molecule: Option<String>,
        /// Quantum numbers as three comma-separated integers.
        #[arg(long, value_name = "N,L,M")]
        state: String,
        /// Comma-separated complexity exponents (fractions allowed).
        #[arg(long, default_value = "2/3,1")]
        b: String,
        /// Output file; default is standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the two reference tables as table_fisher.csv and
    /// table_shannon.csv (three state families for every molecule, with
    /// the lower-bound columns).
    Tables {
        /// Directory receiving the two files (created if missing).
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Complexity curves along one quantum-number axis.
    Figure {
        /// Axis to vary; the other two quantum numbers take the reference
        /// values for that family.
        #[arg(long, value_enum)]
        vary: Axis,
        /// Molecule name; default is every molecule in the table.
        #[arg(long)]
        molecule: Option<String>,
        /// Comma-separated complexity exponents (fractions allowed).
        #[arg(long, default_value = "2/3,1")]
        b: String,
        /// Output file; default is standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Fisher-product, entropy-sum, and moment-product bounds
    /// over the reference state set; exits 1 on any violation.
    Verify {
        /// Molecule name; default is every molecule in the table.
        #[arg(long)]
        molecule: Option<String>,
        /// Restrict to one family.
        #[arg(long, value_enum)]
        block: Option<Axis>,
        /// Highest family index to include (0..=5).
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=5))]
        max_index: u32,
        /// Numerical floor: a margin no worse than -eps still passes.
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// Multiply the momentum Fisher information by this factor before
        /// checking (failure-path hook for the test harness).
        #[arg(long, hide = true, default_value_t = 1.0)]
        corrupt_ip: f64,
    },
    /// Dump the momentum-density grid of one state as CSV.
    DumpMomentum {
        /// Molecule name.
        #[arg(long)]
        molecule: String,
        /// Quantum numbers as three comma-separated integers (the grid
        /// itself depends only on n and l).
        #[arg(long, value_name = "N,L,M")]
        state: String,
        /// Output file; default is standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Shared context: the molecule table, potential form, tolerances, and a
/// cache of momentum grids (one per (molecule, n, l) — the grid never
/// depends on m, so a whole magnetic family shares one).
struct Ctx {
    molecules: Vec<MoleculeRecord>,
    form: PotentialForm,
    tol: f64,
    grids: Mutex<HashMap<(String, u32, u32), Arc<MomentumDensity>>>,
}

impl Ctx {
    fn load(cli: &Cli) -> Result<Self, String> {
        let molecules = match cli
            .molecule_file
            .clone()
            .or_else(|| std::env::var_os(MOLECULE_FILE_ENV).map(PathBuf::from))
        {
            Some(path) => {
                let text = fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read molecule file {}: {e}", path.display()))?;
                parse_molecule_file(&text)
                    .map_err(|e| format!("molecule file {}: {e}", path.display()))?
            }
            None => builtin_molecules(),
        };
        if molecules.is_empty() {
            return Err("molecule table is empty".into());
        }
        Ok(Ctx {
            molecules,
            form: cli.form.into(),
            tol: cli.tol,
            grids: Mutex::new(HashMap::new()),
        })
    }

    /// Molecules selected by an optional `--molecule` flag, in table order.
    fn selected(&self, name: &Option<String>) -> Result<Vec<&MoleculeRecord>, String> {
        match name {
            Some(n) => {
                let rec = find(&self.molecules, n).ok_or_else(|| {
                    format!(
                        "unknown molecule {n:?}; available: {}",
                        self.molecules
                            .iter()
                            .map(|m| m.name.as_str())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })?;
                Ok(vec![rec])
            }
            None => Ok(self.molecules.iter().collect()),
        }
    }

    fn bound_state(&self, rec: &MoleculeRecord, n: u32, l: u32, m: i32) -> Result<BoundState, String> {
        let qs = QuantumState::new(n, l, m).map_err(|e| e.to_string())?;
        Ok(BoundState::new(&rec.potential(self.form), qs))
    }

    fn grid(&self, rec: &MoleculeRecord, n: u32, l: u32) -> Result<Arc<MomentumDensity>, String> {
        let key = (rec.name.clone(), n, l);
        if let Some(g) = self.grids.lock().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let bs = self.bound_state(rec, n, l, 0)?;
        let md = momentum_density_grid(&bs, 1e-12)
            .map_err(|e| format!("momentum grid {} (n={n}, l={l}): {e}", rec.name))?;
        let md = Arc::new(md);
        Ok(self
            .grids
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(md)
            .clone())
    }

    fn measures(&self, rec: &MoleculeRecord, n: u32, l: u32, m: i32) -> Result<MeasureSet, String> {
        let bs = self.bound_state(rec, n, l, m)?;
        let md = self.grid(rec, n, l)?;
        measure_set(&bs, &md, self.tol).map_err(|e| format!("{} ({n},{l},{m}): {e}", rec.name))
    }
}

/// FNV-1a over the bit patterns of the four unit-conversion constants, in
/// a fixed order. Two builds agree on this hash exactly when they agree on
/// every digit of the constants behind all tabulated numbers.
fn constants_hash() -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in [BOHR_PER_ANGSTROM, HARTREE_PER_INVCM, GRAM_PER_AMU, ME_PER_AMU] {
        for byte in c.to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Parse `--b`: comma-separated list, each entry a decimal or a fraction.
/// Returns (display tag, value) pairs; tags become part of column names.
fn parse_b_list(s: &str) -> Result<Vec<(String, f64)>, String> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v = if let Some((num, den)) = tok.split_once('/') {
                let n: f64 = num.trim().parse().map_err(|_| format!("bad exponent {tok:?}"))?;
                let d: f64 = den.trim().parse().map_err(|_| format!("bad exponent {tok:?}"))?;
                if d == 0.0 {
                    return Err(format!("bad exponent {tok:?}"));
                }
                n / d
            } else {
                tok.parse().map_err(|_| format!("bad exponent {tok:?}"))?
            };
            if !v.is_finite() || v < 0.0 {
                return Err(format!("exponent {tok:?} must be finite and nonnegative"));
            }
            Ok((tok.to_string(), v))
        })
        .collect()
}

fn parse_state(s: &str) -> Result<(u32, u32, i32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("state must be three comma-separated integers, got {s:?}"));
    }
    let n = parts[0].trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    let l = parts[1].trim().parse().map_err(|_| format!("bad l in {s:?}"))?;
    let m = parts[2].trim().parse().map_err(|_| format!("bad m in {s:?}"))?;
    Ok((n, l, m))
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        Some(path) => {
            let f = fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            Ok(Box::new(std::io::BufWriter::new(f)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

fn write_header(
    w: &mut dyn Write,
    ctx: &Ctx,
    extra: &[(&str, String)],
) -> Result<(), String> {
    let io = |e: std::io::Error| format!("write failed: {e}");
    writeln!(w, "# kratzer-info {}", env!("CARGO_PKG_VERSION")).map_err(io)?;
    writeln!(w, "# form: {}", ctx.form.label()).map_err(io)?;
    writeln!(w, "# tol: {:.1e}", ctx.tol).map_err(io)?;
    writeln!(w, "# constants-fnv1a: {:016x}", constants_hash()).map_err(io)?;
    for (k, v) in extra {
        writeln!(w, "# {k}: {v}").map_err(io)?;
    }
    Ok(())
}

/// Run `f` over `0..count` on a small worker pool and return the results
/// in index order; output is identical for any thread count.
fn pooled<T: Send>(
    count: usize,
    f: impl Fn(usize) -> Result<T, String> + Sync,
) -> Result<Vec<T>, String> {
    let threads = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(count.max(1))
        .min(8);
    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, Result<T, String>)> = Vec::with_capacity(count);
    std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut part = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= count {
                            break;
                        }
                        part.push((i, f(i)));
                    }
                    part
                })
            })
            .collect();
        for worker in workers {
            indexed.extend(worker.join().expect("worker panicked"));
        }
    });
    indexed.sort_by_key(|&(i, _)| i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

fn run(cli: Cli) -> Result<u32, String> {
    let ctx = Ctx::load(&cli)?;
    match &cli.cmd {
        Cmd::Measures { molecule, state, b, out } => {
            cmd_measures(&ctx, molecule, state, b, out)?;
            Ok(0)
        }
        Cmd::Tables { out } => {
            cmd_tables(&ctx, out)?;
            Ok(0)
        }
        Cmd::Figure { vary, molecule, b, out } => {
            cmd_figure(&ctx, *vary, molecule, b, out)?;
            Ok(0)
        }
        Cmd::Verify { molecule, block, max_index, eps, corrupt_ip } => {
            cmd_verify(&ctx, molecule, *block, *max_index, *eps, *corrupt_ip)
        }
        Cmd::DumpMomentum { molecule, state, out } => {
            cmd_dump_momentum(&ctx, molecule, state, out)?;
            Ok(0)
        }
    }
}

fn complexity_columns(ms: &MeasureSet, bs: &[(String, f64)]) -> String {
    bs.iter()
        .map(|(_, b)| {
            format!(
                "{:.8e},{:.8e}",
                complexity(ms.fisher_r, ms.shannon_r, *b),
                complexity(ms.fisher_p, ms.shannon_p, *b)
            )
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_measures(
    ctx: &Ctx,
    molecule: &Option<String>,
    state: &str,
    b: &str,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let (n, l, m) = parse_state(state)?;
    QuantumState::new(n, l, m).map_err(|e| e.to_string())?;
    let bs = parse_b_list(b)?;
    let recs = ctx.selected(molecule)?;

    let rows = pooled(recs.len(), |i| {
        let ms = ctx.measures(recs[i], n, l, m)?;
        Ok((recs[i].name.clone(), ms))
    })?;

    let mut w = sink(out)?;
    write_header(&mut *w, ctx, &[("state", format!("{n},{l},{m}"))])?;
    let ccols = bs
        .iter()
        .map(|(tag, _)| format!("c_r[b={tag}],c_p[b={tag}]"))
        .collect::<Vec<_>>()
        .join(",");
    let io = |e: std::io::Error| format!("write failed: {e}");
    writeln!(
        w,
        "molecule,n,l,m,energy,i_r,i_p,i_t,s_r,s_p,s_t,{ccols},\
         fisher_margin,entropy_margin,moment_margin,ip_method,grid_norm_defect"
    )
    .map_err(io)?;
    for (name, ms) in rows {
        let checks = check_bounds(&ms, 0.0);
        writeln!(
            w,
            "{name},{n},{l},{m},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{},\
             {:.8e},{:.8e},{:.8e},{},{:.8e}",
            ms.energy,
            ms.fisher_r,
            ms.fisher_p,
            ms.fisher_r * ms.fisher_p,
            ms.shannon_r,
            ms.shannon_p,
            ms.shannon_total(),
            complexity_columns(&ms, &bs),
            checks[0].margin,
            checks[1].margin,
            checks[2].margin,
            ms.fisher_p_method,
            ms.raw_norm_defect,
        )
        .map_err(io)?;
    }
    w.flush().map_err(io)
}

fn cmd_tables(ctx: &Ctx, out: &PathBuf) -> Result<(), String> {
    fs::create_dir_all(out).map_err(|e| format!("cannot create {}: {e}", out.display()))?;
    let recs = ctx.selected(&None)?;
    let families = [Axis::N, Axis::L, Axis::M];

    // (family, molecule, index) in deterministic output order.
    let jobs: Vec<(Axis, usize, u32)> = families
        .iter()
        .flat_map(|&fam| {
            (0..recs.len()).flat_map(move |mi| (0..6u32).map(move |i| (fam, mi, i)))
        })
        .collect();
    let rows = pooled(jobs.len(), |j| {
        let (fam, mi, i) = jobs[j];
        let (n, l, m) = fam.state(i);
        let ms = ctx.measures(recs[mi], n, l, m)?;
        Ok((fam, recs[mi].name.clone(), ms))
    })?;

    let io = |e: std::io::Error| format!("write failed: {e}");
    let fisher_path = out.join("table_fisher.csv");
    let shannon_path = out.join("table_shannon.csv");
    let mut fw = sink(&Some(fisher_path))?;
    let mut sw = sink(&Some(shannon_path))?;
    write_header(&mut *fw, ctx, &[("table", "fisher".into())])?;
    write_header(&mut *sw, ctx, &[("table", "shannon".into())])?;
    writeln!(fw, "family,molecule,n,l,m,i_r,i_p,i_t,fisher_bound").map_err(io)?;
    writeln!(sw, "family,molecule,n,l,m,s_r,s_p,s_t,entropy_bound").map_err(io)?;
    for (fam, name, ms) in rows {
        let (n, l, m) = (ms.state.n, ms.state.l, ms.state.m);
        let checks = check_bounds(&ms, 0.0);
        writeln!(
            fw,
            "{},{name},{n},{l},{m},{:.8e},{:.8e},{:.8e},{:.8e}",
            fam.label(),
            ms.fisher_r,
            ms.fisher_p,
            ms.fisher_r * ms.fisher_p,
            checks[0].bound,
        )
        .map_err(io)?;
        writeln!(
            sw,
            "{},{name},{n},{l},{m},{:.8e},{:.8e},{:.8e},{:.8e}",
            fam.label(),
            ms.shannon_r,
            ms.shannon_p,
            ms.shannon_total(),
            ENTROPY_SUM_BOUND,
        )
        .map_err(io)?;
    }
    fw.flush().map_err(io)?;
    sw.flush().map_err(io)
}

fn cmd_figure(
    ctx: &Ctx,
    vary: Axis,
    molecule: &Option<String>,
    b: &str,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let bs = parse_b_list(b)?;
    let recs = ctx.selected(molecule)?;
    let jobs: Vec<(usize, u32)> = (0..recs.len())
        .flat_map(|mi| (0..6u32).map(move |i| (mi, i)))
        .collect();
    let rows = pooled(jobs.len(), |j| {
        let (mi, i) = jobs[j];
        let (n, l, m) = vary.state(i);
        let ms = ctx.measures(recs[mi], n, l, m)?;
        Ok((recs[mi].name.clone(), i, ms))
    })?;

    let mut w = sink(out)?;
    write_header(&mut *w, ctx, &[("axis", vary.label().into())])?;
    let ccols = bs
        .iter()
        .map(|(tag, _)| format!("c_r[b={tag}],c_p[b={tag}]"))
        .collect::<Vec<_>>()
        .join(",");
    let io = |e: std::io::Error| format!("write failed: {e}");
    writeln!(w, "molecule,index,{ccols}").map_err(io)?;
    for (name, i, ms) in rows {
        writeln!(w, "{name},{i},{}", complexity_columns(&ms, &bs)).map_err(io)?;
    }
    w.flush().map_err(io)
}

fn cmd_verify(
    ctx: &Ctx,
    molecule: &Option<String>,
    block: Option<Axis>,
    max_index: u32,
    eps: f64,
    corrupt_ip: f64,
) -> Result<u32, String> {
    let recs = ctx.selected(molecule)?;
    let families: Vec<Axis> = match block {
        Some(f) => vec![f],
        None => vec![Axis::N, Axis::L, Axis::M],
    };
    let jobs: Vec<(Axis, usize, u32)> = families
        .iter()
        .flat_map(|&fam| {
            (0..recs.len()).flat_map(move |mi| (0..=max_index).map(move |i| (fam, mi, i)))
        })
        .collect();
    let rows = pooled(jobs.len(), |j| {
        let (fam, mi, i) = jobs[j];
        let (n, l, m) = fam.state(i);
        let mut ms = ctx.measures(recs[mi], n, l, m)?;
        ms.fisher_p *= corrupt_ip;
        Ok((fam, recs[mi].name.clone(), ms))
    })?;

    let mut checks = 0u32;
    let mut violations = 0u32;
    for (fam, name, ms) in &rows {
        let (n, l, m) = (ms.state.n, ms.state.l, ms.state.m);
        for bc in check_bounds(ms, eps) {
            checks += 1;
            if bc.pass {
                println!(
                    "ok        {} {name} ({n},{l},{m}) {}: {:.8e} >= {:.8e}",
                    fam.label(),
                    bc.name,
                    bc.lhs,
                    bc.bound
                );
            } else {
                violations += 1;
                println!(
                    "VIOLATION {} {name} ({n},{l},{m}) {}: {:.8e} < {:.8e} (margin {:.3e})",
                    fam.label(),
                    bc.name,
                    bc.lhs,
                    bc.bound,
                    bc.margin
                );
            }
        }
    }
    println!(
        "checked {} states, {checks} bound checks, {violations} violations \
         (fisher-product, entropy-sum S_t >= 6.43418, uncertainty-product)",
        rows.len()
    );
    Ok(violations)
}

fn cmd_dump_momentum(
    ctx: &Ctx,
    molecule: &str,
    state: &str,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let (n, l, m) = parse_state(state)?;
    QuantumState::new(n, l, m).map_err(|e| e.to_string())?;
    let recs = ctx.selected(&Some(molecule.to_string()))?;
    let md = ctx.grid(recs[0], n, l)?;

    let mut w = sink(out)?;
    write_header(
        &mut *w,
        ctx,
        &[
            ("molecule", recs[0].name.clone()),
            ("state", format!("n={n}, l={l}")),
            ("p_max", format!("{:.8e}", md.p_max)),
            ("raw_norm_defect", format!("{:.8e}", md.raw_norm_defect)),
        ],
    )?;
    let io = |e: std::io::Error| format!("write failed: {e}");
    writeln!(w, "p,density").map_err(io)?;
    for (p, d) in md.p.iter().zip(&md.density) {
        writeln!(w, "{p:.8e},{d:.8e}").map_err(io)?;
    }
    w.flush().map_err(io)
}
