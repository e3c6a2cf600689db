use std::fs;
use std::io::{self, Write};
use std::path::Path;

use pilat::antichains::{self, AntichainReport, AntichainWitness, ANTICHAIN_CAP, ANTICHAIN_HARD_CAP};
use pilat::cardinal::{self, ContinuumModel};
use pilat::chains::{self, ChainReport, ChainWitness, MAXIMAL_CHAINS_CAP, MAXIMAL_CHAINS_HARD_CAP};
use pilat::complements::{self, CENSUS_CAP, COMPLEMENTS_CAP, COMPLEMENTS_HARD_CAP};
use pilat::counting::{atom_count, bell, coatom_count};
use pilat::lattice::{ENUMERATE_CAP, ENUMERATE_HARD_CAP};
use pilat::ortho;
use pilat::{Chain, ComplementCensusRow, LatticeUniverse, Partition, WideCount};
use serde_json::json;

use crate::render;
use crate::{
    AntichainFile, AntichainsCommand, CardinalCommand, ChainFile, ChainsCommand, Command, ComplementsCommand,
    FamilyArgs, Format, HasseArgs, OrthoCommand, MAX_N_ENV, VERSION,
};

/// Default cap for full-lattice Hasse diagrams.
pub const HASSE_CAP: usize = 7;
pub const HASSE_HARD_CAP: usize = 9;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Core(#[from] pilat::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(String, io::Error),
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

type Result<T> = std::result::Result<T, CommandError>;

/// Size caps after the environment override.
#[derive(Debug, Clone, Copy, Default)]
pub struct Caps {
    override_n: Option<usize>,
}

impl Caps {
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Err(_) => Ok(Caps::default()),
            Ok(v) => v
                .trim()
                .parse()
                .map(|n| Caps { override_n: Some(n) })
                .map_err(|_| CommandError::Usage(format!("{MAX_N_ENV} must be a non-negative integer, got {v:?}"))),
        }
    }

    fn cap(&self, default: usize, hard: usize) -> usize {
        self.override_n.map_or(default, |n| n.min(hard))
    }
}

pub struct Context {
    pub caps: Caps,
    pub pool: rayon::ThreadPool,
}

pub fn dispatch(cmd: &Command, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Enumerate { n, counts, out } => enumerate(*n, *counts, *out, ctx, w),
        Command::Chains(c) => chains_cmd(c, ctx, w),
        Command::Antichains(c) => antichains_cmd(c, ctx, w),
        Command::Complements(c) => complements_cmd(c, ctx, w),
        Command::Ortho(c) => ortho_cmd(c, w),
        Command::Cardinal(c) => cardinal_cmd(c, w),
        Command::Hasse(a) => hasse(a, ctx, w),
    }
}

fn enumerate(n: usize, counts: bool, out: Format, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    if out == Format::Csv {
        return Err(CommandError::Usage("enumerate supports --out text or json".into()));
    }
    if counts {
        pilat::GroundSet::new(n)?;
        let b: WideCount = bell(n)?;
        let a: WideCount = atom_count(n)?;
        let c: WideCount = coatom_count(n)?;
        match out {
            Format::Json => writeln!(
                w,
                "{}",
                json!({"version": VERSION, "n": n, "bell": b, "atoms": a, "coatoms": c})
            )?,
            _ => writeln!(w, "n={n} bell={b} atoms={a} coatoms={c}")?,
        }
        return Ok(0);
    }
    let u = LatticeUniverse::enumerate_with_cap(n, ctx.caps.cap(ENUMERATE_CAP, ENUMERATE_HARD_CAP))?;
    match out {
        Format::Json => {
            let lits: Vec<String> = u.iter().map(Partition::to_string).collect();
            writeln!(w, "{}", json!({"version": VERSION, "n": n, "partitions": lits}))?;
        }
        _ => {
            for p in &u {
                writeln!(w, "{p}")?;
            }
        }
    }
    Ok(0)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CommandError::Io(path.display().to_string(), e))
}

/// One literal per line; blank lines and lines starting with `#` are skipped.
/// Without `n`, the ground set is inferred from the largest element.
pub fn read_partitions(path: &Path, n: Option<usize>) -> Result<Vec<Partition>> {
    let text = read_text(path)?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let n = match n {
        Some(n) => n,
        None => lines
            .iter()
            .map(|l| Partition::parse_inferred(l).map(|p| p.n()))
            .collect::<pilat::Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0),
    };
    let parts = lines
        .iter()
        .map(|l| Partition::parse(l, n))
        .collect::<pilat::Result<Vec<_>>>()?;
    if parts.is_empty() {
        return Err(CommandError::Usage(format!(
            "{}: no partitions in file",
            path.display()
        )));
    }
    Ok(parts)
}

fn chains_cmd(cmd: &ChainsCommand, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    match cmd {
        ChainsCommand::Keyframe { k } => {
            for p in chains::keyframe_chain(*k)?.members() {
                writeln!(w, "{p}")?;
            }
            Ok(0)
        }
        ChainsCommand::Verify(ChainFile { file, n }) => {
            let members = read_partitions(file, *n)?;
            let report = chains::verify_chain(&members)?;
            write_chain_report(&report, w)?;
            Ok(if report.is_maximal { 0 } else { 1 })
        }
        ChainsCommand::Extend(ChainFile { file, n }) => {
            let chain = Chain::new(read_partitions(file, *n)?)?;
            for p in chains::extend_to_maximal(&chain)?.members() {
                writeln!(w, "{p}")?;
            }
            Ok(0)
        }
        ChainsCommand::Maximal { n, count } => {
            let cap = ctx.caps.cap(MAXIMAL_CHAINS_CAP, MAXIMAL_CHAINS_HARD_CAP);
            let it = chains::maximal_chains_with_cap(*n, cap)?;
            if *count {
                writeln!(w, "{}", it.count())?;
            } else {
                for c in it {
                    let lits: Vec<String> = c.members().iter().map(Partition::to_string).collect();
                    writeln!(w, "{}", lits.join(" < "))?;
                }
            }
            Ok(0)
        }
    }
}

fn write_chain_report(r: &ChainReport, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "chain: {}", r.is_chain)?;
    writeln!(w, "saturated: {}", r.is_saturated)?;
    writeln!(w, "maximal: {}", r.is_maximal)?;
    match &r.witness {
        None => {}
        Some(ChainWitness::NotIncreasing { lower, upper }) => writeln!(
            w,
            "witness: line {} is not strictly below line {}",
            lower + 1,
            upper + 1
        )?,
        Some(ChainWitness::Gap { lower, insert }) => writeln!(
            w,
            "witness: {insert} fits between lines {} and {}",
            lower + 1,
            lower + 2
        )?,
        Some(ChainWitness::Extendable { insert }) => writeln!(w, "witness: {insert} extends the chain")?,
    }
    Ok(())
}

fn antichains_cmd(cmd: &AntichainsCommand, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    let cap = ctx.caps.cap(ANTICHAIN_CAP, ANTICHAIN_HARD_CAP);
    match cmd {
        AntichainsCommand::Doubleton(FamilyArgs { n, verify })
        | AntichainsCommand::Bipartition(FamilyArgs { n, verify }) => {
            let family = match cmd {
                AntichainsCommand::Doubleton(_) => antichains::doubleton_antichain(*n)?,
                _ => antichains::bipartition_antichain(*n)?,
            };
            for p in family.members() {
                writeln!(w, "{p}")?;
            }
            if *verify {
                let report = antichains::verify_antichain_with_cap(family.members(), *n, cap)?;
                write_antichain_report(&report, w)?;
                return Ok(if report.is_maximal { 0 } else { 1 });
            }
            Ok(0)
        }
        AntichainsCommand::Verify(AntichainFile { file, n }) => {
            let members = read_partitions(file, Some(*n))?;
            let report = antichains::verify_antichain_with_cap(&members, *n, cap)?;
            write_antichain_report(&report, w)?;
            Ok(if report.is_maximal { 0 } else { 1 })
        }
        AntichainsCommand::Extend(AntichainFile { file, n }) => {
            let members = read_partitions(file, Some(*n))?;
            for p in antichains::extend_to_maximal_antichain_with_cap(&members, *n, cap)?.members() {
                writeln!(w, "{p}")?;
            }
            Ok(0)
        }
    }
}

fn write_antichain_report(r: &AntichainReport, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "antichain: {}", r.is_antichain)?;
    writeln!(w, "maximal: {}", r.is_maximal)?;
    match &r.witness {
        None => {}
        Some(AntichainWitness::Comparable(i, j)) => {
            writeln!(w, "witness: members {} and {} are comparable", i + 1, j + 1)?
        }
        Some(AntichainWitness::Addable(p)) => writeln!(w, "witness: {p} is incomparable with every member")?,
    }
    Ok(())
}

fn complements_cmd(cmd: &ComplementsCommand, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    match cmd {
        ComplementsCommand::Census { n, out } => {
            let cap = ctx.caps.cap(CENSUS_CAP, COMPLEMENTS_HARD_CAP);
            let rows: Vec<ComplementCensusRow> =
                ctx.pool.install(|| complements::complement_census_with_cap(*n, cap))?;
            match out {
                Format::Csv => render::census_csv(*n, &rows, w)?,
                Format::Json => render::census_json(*n, &rows, w)?,
                Format::Text => render::census_text(&rows, w)?,
            }
            Ok(if rows.iter().all(|r| r.grieser_agrees()) { 0 } else { 1 })
        }
        ComplementsCommand::List { partition, n } => {
            let p = match n {
                Some(n) => Partition::parse(partition, *n)?,
                None => Partition::parse_inferred(partition)?,
            };
            let cap = ctx.caps.cap(COMPLEMENTS_CAP, COMPLEMENTS_HARD_CAP);
            for q in complements::enumerate_complements_with_cap(&p, cap)? {
                writeln!(w, "{q}")?;
            }
            Ok(0)
        }
    }
}

fn ortho_cmd(cmd: &OrthoCommand, w: &mut dyn Write) -> Result<i32> {
    match cmd {
        OrthoCommand::Search { n, exhaustive } => {
            match ortho::search_orthocomplementation(*n, *exhaustive)? {
                None => writeln!(w, "none")?,
                Some(f) => {
                    let u = LatticeUniverse::enumerate(*n)?;
                    writeln!(w, "found")?;
                    for (a, b) in f.pairs(&u) {
                        writeln!(w, "{a} -> {b}")?;
                    }
                }
            }
            Ok(0)
        }
        OrthoCommand::Witness { n } => {
            let wit = ortho::non_ortho_witness(*n)?;
            writeln!(w, "n={} atoms={} coatoms={}", wit.n, wit.atom_count, wit.coatom_count)?;
            writeln!(w, "{}", wit.reason)?;
            Ok(0)
        }
    }
}

fn cardinal_cmd(cmd: &CardinalCommand, w: &mut dyn Write) -> Result<i32> {
    let CardinalCommand::Eval { expr, model } = cmd;
    let model = if model == "gch" {
        ContinuumModel::Gch
    } else {
        ContinuumModel::from_json(&read_text(Path::new(model))?)?
    };
    writeln!(w, "{}", cardinal::eval(expr, &model)?)?;
    Ok(0)
}

fn hasse(args: &HasseArgs, ctx: &Context, w: &mut dyn Write) -> Result<i32> {
    if let Some(n) = args.n {
        let u = LatticeUniverse::enumerate_with_cap(n, ctx.caps.cap(HASSE_CAP, HASSE_HARD_CAP))?;
        render::hasse_lattice(&u, w)?;
    } else {
        let path = args
            .chain
            .as_ref()
            .or(args.antichain.as_ref())
            .expect("clap enforces one source");
        let members = read_partitions(path, None)?;
        render::hasse_induced(&members, w)?;
    }
    Ok(0)
}
