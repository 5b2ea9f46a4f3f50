//! Subcommands. Exit 0 on success, 1 when a check fails, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lamina::equivalence::{check_laminational_equivalence, classify, is_q_lamination, q_lamination_from};
use lamina::generators::{pullback, search_hexagon};
use lamina::lamination::{
    check_gap_invariance, check_sibling_invariant, check_thurston, gaps, is_clean, is_proper, validate, ClassificationReport,
    Flag, Frontier, GapVerdict, ImplicationStatus, PropertyCheck, Witness,
};
use lamina::{Degree, Lamination};

use crate::io::{self, IoError};
use crate::svg::{render_svg, RenderOptions, MIN_SIZE};

#[derive(Parser, Debug)]
#[command(name = "lamina", version, about = "Finite invariant laminations of the circle")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run one check, or all of them
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },
    /// Print the flag table, implications and witnesses
    Classify { file: PathBuf },
    /// List the faces with their vertices and images
    Gaps { file: PathBuf },
    /// Build a pullback tower from a JSON spec
    Pullback {
        #[arg(long)]
        spec: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Emit the q-lamination of a partition
    Qlam {
        #[arg(long)]
        classes: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Draw a lamination as SVG
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        hyperbolic: bool,
        #[arg(long)]
        label: bool,
        #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u32).range(MIN_SIZE as i64..))]
        size: u32,
    },
    /// Bounded searches
    Search {
        #[command(subcommand)]
        what: Search,
    },
}

#[derive(Subcommand, Debug)]
enum Search {
    /// Thurston but not sibling invariant cubic example
    Hexagon {
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 80)]
        max_den: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Unlinked,
    Sibling,
    Thurston,
    Proper,
    Clean,
    Q,
    All,
}

enum Failure {
    Input(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<lamina::Error> for Failure {
    fn from(e: lamina::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(path: &Path) -> Result<Lamination, Failure> {
    let text = io::read(path)?;
    io::parse_lamination(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn flag_value(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

fn print_witnesses<'a>(out: &mut dyn Write, ws: impl IntoIterator<Item = &'a Witness>) {
    for w in ws {
        let _ = writeln!(out, "witness {}: {} ({})", w.flag, w.item, w.reason);
    }
}

fn print_report(out: &mut dyn Write, r: &ClassificationReport) {
    for f in Flag::ALL {
        let _ = writeln!(out, "{:<28} {}", f.name(), flag_value(r.get(f)));
    }
    let _ = writeln!(out, "frontier leaves              {}", r.frontier.len());
    let _ = writeln!(out, "exempt gaps                  {}", r.exempt_gaps);
    for i in &r.implications {
        let s = match i.status {
            ImplicationStatus::Holds => "holds",
            ImplicationStatus::Vacuous => "vacuous",
            ImplicationStatus::Violated => "VIOLATED",
        };
        let _ = writeln!(out, "implication {:<44} {s}", i.name);
    }
    print_witnesses(out, &r.witnesses);
}

fn property(out: &mut dyn Write, flag: Flag, p: PropertyCheck) -> bool {
    let _ = writeln!(out, "{:<28} {}", flag.name(), p.holds);
    print_witnesses(out, &p.witnesses);
    p.holds
}

fn report_flag(out: &mut dyn Write, flag: Flag, r: ClassificationReport) -> bool {
    let v = r.get(flag) == Some(true);
    let _ = writeln!(out, "{:<28} {}", flag.name(), flag_value(r.get(flag)));
    print_witnesses(out, r.witnesses.iter().filter(|w| w.flag == flag));
    v
}

const ALL_CHECKED: [Flag; 6] =
    [Flag::UnlinkedOk, Flag::SiblingInvariant, Flag::ThurstonInvariant, Flag::Proper, Flag::Clean, Flag::QLamination];

fn exec(cmd: Cmd, out: &mut dyn Write) -> Result<bool, Failure> {
    match cmd {
        Cmd::Validate { file, check } => {
            let l = load(&file)?;
            Ok(match check {
                Check::Unlinked => report_flag(out, Flag::UnlinkedOk, validate(&l)),
                Check::Sibling => report_flag(out, Flag::SiblingInvariant, check_sibling_invariant(&l, &Frontier::Auto)),
                Check::Thurston => report_flag(out, Flag::ThurstonInvariant, check_thurston(&l, &Frontier::Auto)),
                Check::Proper => property(out, Flag::Proper, is_proper(&l)),
                Check::Clean => property(out, Flag::Clean, is_clean(&l)),
                Check::Q => property(out, Flag::QLamination, is_q_lamination(&l)),
                Check::All => {
                    let r = classify(&l);
                    print_report(out, &r);
                    ALL_CHECKED.iter().all(|f| r.get(*f) == Some(true))
                }
            })
        }
        Cmd::Classify { file } => {
            print_report(out, &classify(&load(&file)?));
            Ok(true)
        }
        Cmd::Gaps { file } => {
            let l = load(&file)?;
            let faces = gaps(&l);
            let _ = writeln!(out, "count {}", faces.len());
            for (i, g) in faces.iter().enumerate() {
                let verts: Vec<String> = g.vertices.iter().map(|a| a.to_string()).collect();
                let verdict = match check_gap_invariance(&l, g)? {
                    GapVerdict::Point(a) => format!("point {a}"),
                    GapVerdict::Leaf(c) => format!("leaf {c}"),
                    GapVerdict::Gap { degree } => format!("gap degree {degree}"),
                    GapVerdict::Fail { item, reason } => format!("fail {item} ({reason})"),
                };
                let _ = writeln!(out, "gap {i}: [{}] -> {verdict}", verts.join(" "));
            }
            Ok(true)
        }
        Cmd::Pullback { spec, output } => {
            let spec = io::read_pullback_spec(&spec)?;
            let l = pullback(&spec)?;
            io::write(&output, &io::serialize_for(&output, &l))?;
            let _ = writeln!(out, "wrote {} leaves to {}", l.len(), output.display());
            Ok(true)
        }
        Cmd::Qlam { classes, degree, output } => {
            let d = Degree::new(degree)?;
            let p = io::parse_partition(&io::read(&classes)?).map_err(|e| Failure::Input(format!("{}: {e}", classes.display())))?;
            let r = check_laminational_equivalence(d, &p);
            if !r.passes() {
                for w in &r.witnesses {
                    let _ = writeln!(out, "witness {:?}: {} ({})", w.condition, w.item, w.reason);
                }
                return Ok(false);
            }
            let l = q_lamination_from(d, &p)?;
            io::write(&output, &io::serialize_for(&output, &l))?;
            let _ = writeln!(out, "wrote {} leaves to {}", l.len(), output.display());
            Ok(true)
        }
        Cmd::Render { file, output, hyperbolic, label, size } => {
            let l = load(&file)?;
            io::write(&output, &render_svg(&l, &RenderOptions { hyperbolic, label, size }))?;
            Ok(true)
        }
        Cmd::Search { what: Search::Hexagon { degree, max_den, output } } => {
            let d = Degree::new(degree)?;
            let Some(ex) = search_hexagon(d, max_den)? else {
                let _ = writeln!(out, "no example with denominators up to {max_den}");
                return Ok(false);
            };
            let list = |v: &[lamina::Angle]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "triangle {}", list(&ex.triangle));
            let _ = writeln!(out, "hexagon {}", list(&ex.hexagon));
            for c in ex.portrait.chords() {
                let _ = writeln!(out, "portrait {c}");
            }
            let _ = writeln!(out, "inserted {}", ex.inserted[0]);
            let _ = writeln!(out, "inserted {}", ex.inserted[1]);
            let _ = writeln!(out, "depth {} leaves {}", ex.depth, ex.lamination.len());
            if let Some(path) = output {
                io::write(&path, &io::serialize_for(&path, &ex.lamination))?;
            }
            Ok(true)
        }
    }
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match exec(cli.cmd, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
