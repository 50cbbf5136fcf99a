//! The `vndim` command line.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when the mathematics
//! refuses the input (no lattice, no occurrence, parity, ...).

mod render;
mod tables;

pub use render::{Cell, Format, Report};
pub use tables::{table, TABLE_NAMES};

use std::ffi::OsString;

use clap::{Args, CommandFactory, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::factor;
use crate::finite_field::{self as ff, CharacterIndex, NuIndex, PrimePower};
use crate::fuchsian::{self, FuchsianSignature, GroupMode};
use crate::padic::{self, HaarNormalization, JLClass, RepKind};
use crate::scalar::Rational;

/// Environment variable overriding the minimal-weight scan cap.
pub const SCAN_CAP_VAR: &str = "VNDIM_SCAN_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "vndim",
    version,
    about = "Exact von Neumann dimensions for lattices in PSL(2,R) and PGL(2,F)"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Render π as "pi" and the product dot as "*".
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lattices in PSL(2,R).
    #[command(subcommand)]
    Fuchsian(FuchsianCmd),
    /// Coupling constants and subfactor indices.
    #[command(subcommand)]
    Factor(FactorCmd),
    /// GL(2,F_q) orders and characters of F_{q^2}^×.
    #[command(subcommand)]
    Ff(FfCmd),
    /// Lattices and representations of PGL(2,F).
    #[command(subcommand)]
    Padic(PadicCmd),
    /// Regenerate a table.
    Table {
        /// One of hecke:<qmax>, free-congruence, vn-free:<m>, subfactor:<m>,
        /// matrix, padic:<q>:<nmax>, jl:<p>:<jmax>.
        name: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
enum ModeArg {
    #[default]
    Psl,
    Sl,
}

impl From<ModeArg> for GroupMode {
    fn from(m: ModeArg) -> GroupMode {
        match m {
            ModeArg::Psl => GroupMode::Psl2R,
            ModeArg::Sl => GroupMode::Sl2R,
        }
    }
}

#[derive(Debug, Args)]
struct SigArg {
    /// Signature "g;m1,m2,...;h" ("-" for no elliptic points) or a catalog
    /// name such as H3 or Gamma0(4).
    #[arg(long)]
    sig: String,
}

#[derive(Debug, Subcommand)]
enum FuchsianCmd {
    /// Area of the quotient, 2π(2g-2+Σ(1-1/m_j)+h).
    Covolume(SigArg),
    /// Dimension of the weight-k cusp forms.
    Cuspdim {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long, allow_negative_numbers = true)]
        weight: i64,
    },
    /// Multiplicity of D_m in L^2(Γ\G).
    Mult {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "psl")]
        mode: ModeArg,
    },
    /// Formal dimension m/(4π) of D_m.
    Formaldim {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "psl")]
        mode: ModeArg,
    },
    /// Von Neumann dimension of D_m over the group algebra.
    Vndim {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "psl")]
        mode: ModeArg,
    },
    /// Smallest odd m for which D_m occurs.
    Minweight(SigArg),
    /// Dimension of D_m inside L^2(Γ1\G) over the algebra of a second lattice.
    Twolattice {
        #[command(flatten)]
        sig: SigArg,
        /// Signature of the lattice whose group algebra acts.
        #[arg(long)]
        sig2: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Signature of a named group.
    Catalog {
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Subcommand)]
enum FactorCmd {
    /// Coupling constant k/n of M_n(C) on n-by-k matrices.
    Coupling {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Jones index from two module dimensions.
    Jones {
        #[arg(long, allow_negative_numbers = true)]
        sub: String,
        #[arg(long, allow_negative_numbers = true)]
        ambient: String,
    },
    /// Subgroup index from free ranks.
    Freeindex {
        #[arg(long)]
        ambient_rank: u64,
        #[arg(long)]
        sub_rank: u64,
    },
}

#[derive(Debug, Args)]
struct QArg {
    #[arg(long)]
    q: u64,
}

#[derive(Debug, Subcommand)]
enum FfCmd {
    /// Orders of GL(2,F_q) and its Borel subgroup.
    Orders(QArg),
    /// Same orders by exhaustive count.
    Enumerate(QArg),
    /// Whether the character with index a is regular.
    Regular {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: u64,
    },
    /// Regular characters restricting to ν, closed form.
    CountRegular {
        #[arg(long)]
        q: u64,
        /// trivial, sign, or an index modulo q-1.
        #[arg(long)]
        nu: String,
    },
    /// Regular characters restricting to ν, by enumeration.
    BruteRegular {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        nu: String,
    },
    /// Norm and trace maps of F_{q^2}/F_q.
    Normtrace(QArg),
    /// Principal series, cuspidal and Steinberg degrees.
    Repdims(QArg),
}

#[derive(Debug, Args)]
struct NormArg {
    #[arg(long, default_value = "k1")]
    norm: String,
}

#[derive(Debug, Subcommand)]
enum PadicCmd {
    /// p-adic valuation of a rational.
    Valuation {
        #[arg(long, allow_negative_numbers = true)]
        r: String,
        #[arg(long)]
        p: u64,
    },
    /// Checks |r+s|_p <= max(|r|_p, |s|_p).
    Ultrametric {
        #[arg(long, allow_negative_numbers = true)]
        r: String,
        #[arg(long, allow_negative_numbers = true)]
        s: String,
        #[arg(long)]
        p: u64,
    },
    /// Level arithmetic across a quadratic extension.
    Level {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        e: u32,
    },
    /// Number of quadratic extensions of Q_p.
    Quadext {
        #[arg(long)]
        p: u64,
    },
    /// Reduced words of the affine Weyl group up to length l.
    Weyl {
        #[arg(long)]
        l: usize,
    },
    /// Partial Poincaré sum up to length l, with the closed form.
    Weylsum {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: usize,
    },
    /// Volumes of IZ/Z and KZ/Z.
    Haar {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        norm: NormArg,
    },
    /// Formal dimension of the Steinberg representation.
    Steinberg {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        norm: NormArg,
    },
    /// Formal dimension of a depth-zero supercuspidal.
    Depthzero {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        norm: NormArg,
    },
    /// Torsion-free lattice of free rank n.
    Lattice {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Covolume of that lattice.
    Covolume {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        norm: NormArg,
    },
    /// Von Neumann dimension over the lattice's group algebra.
    Vndim {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        norm: NormArg,
    },
    /// Formal dimension of a quaternion-side representation.
    Jl {
        #[arg(long)]
        p: u64,
        /// special, unram:j=<n> or ram:j=<n>.
        #[arg(long = "class")]
        class: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let stderr = format!("{text}\nvalid verbs:\n{}", verbs().join("\n"));
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("{stderr}\n"),
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Outcome {
            code: 0,
            stdout: report.render(cli.format, cli.ascii),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_usage() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Every leaf command path, e.g. `fuchsian vndim`.
pub fn verbs() -> Vec<String> {
    fn walk(cmd: &clap::Command, prefix: &str, out: &mut Vec<String>) {
        for sub in cmd.get_subcommands() {
            let path = if prefix.is_empty() {
                sub.get_name().to_string()
            } else {
                format!("{prefix} {}", sub.get_name())
            };
            if sub.has_subcommands() {
                walk(sub, &path, out);
            } else {
                let positionals: String = sub
                    .get_positionals()
                    .map(|a| format!(" <{}>", a.get_id()))
                    .collect();
                out.push(format!("{path}{positionals}"));
            }
        }
    }
    let mut out = Vec::new();
    walk(&Cli::command(), "", &mut out);
    out
}

fn signature(s: &str) -> Result<FuchsianSignature> {
    if s.contains(';') {
        s.parse()
    } else {
        fuchsian::catalog(s)
    }
}

fn rational(s: &str) -> Result<Rational> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{s:?} is not a rational number")))
}

fn prime_power(q: u64) -> Result<PrimePower> {
    PrimePower::new(q)
}

fn scan_cap() -> Result<i64> {
    match std::env::var(SCAN_CAP_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("{SCAN_CAP_VAR}={v:?} is not an integer"))),
        Err(_) => Ok(fuchsian::DEFAULT_SCAN_CAP),
    }
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Fuchsian(cmd) => fuchsian_cmd(cmd),
        Command::Factor(cmd) => factor_cmd(cmd),
        Command::Ff(cmd) => ff_cmd(cmd),
        Command::Padic(cmd) => padic_cmd(cmd),
        Command::Table { name } => table(name),
    }
}

fn fuchsian_cmd(cmd: &FuchsianCmd) -> Result<Report> {
    Ok(match cmd {
        FuchsianCmd::Covolume(s) => {
            Report::scalar(Cell::Pi(fuchsian::covolume(&signature(&s.sig)?)))
        }
        FuchsianCmd::Cuspdim { sig, weight } => Report::scalar(Cell::int(fuchsian::cusp_form_dim(
            &signature(&sig.sig)?,
            *weight,
        )?)),
        FuchsianCmd::Mult { sig, m, mode } => Report::scalar(Cell::int(
            fuchsian::discrete_series_multiplicity(&signature(&sig.sig)?, *m, (*mode).into())?,
        )),
        FuchsianCmd::Formaldim { m, mode } => Report::scalar(Cell::Pi(
            fuchsian::formal_dimension_psl(*m, (*mode).into())?,
        )),
        FuchsianCmd::Vndim { sig, m, mode } => Report::scalar(Cell::rat(fuchsian::vn_dimension(
            &signature(&sig.sig)?,
            *m,
            (*mode).into(),
        )?)),
        FuchsianCmd::Minweight(s) => Report::scalar(Cell::int(
            fuchsian::minimal_discrete_series_weight(&signature(&s.sig)?, scan_cap()?)?,
        )),
        FuchsianCmd::Twolattice { sig, sig2, m } => Report::scalar(Cell::rat(
            fuchsian::two_lattice_vn_dimension(&signature(&sig.sig)?, &signature(sig2)?, *m)?,
        )),
        FuchsianCmd::Catalog { name } => {
            Report::scalar(Cell::text(fuchsian::catalog(name)?.to_string()))
        }
    })
}

fn factor_cmd(cmd: &FactorCmd) -> Result<Report> {
    Ok(match cmd {
        FactorCmd::Coupling { n, k } => Report::scalar(Cell::rat(factor::matrix_coupling(*n, *k)?)),
        FactorCmd::Jones { sub, ambient } => Report::scalar(Cell::rat(factor::jones_index(
            &rational(sub)?,
            &rational(ambient)?,
        )?)),
        FactorCmd::Freeindex {
            ambient_rank,
            sub_rank,
        } => Report::scalar(Cell::int(factor::free_group_index(
            *ambient_rank,
            *sub_rank,
        )?)),
    })
}

fn ff_cmd(cmd: &FfCmd) -> Result<Report> {
    Ok(match cmd {
        FfCmd::Orders(QArg { q }) => {
            let o = ff::group_orders(&prime_power(*q)?);
            Report::record(vec![
                ("gl2_order", Cell::int(o.gl2_order)),
                ("borel_order", Cell::int(o.borel_order)),
                ("borel_index", Cell::int(o.borel_index)),
            ])
        }
        FfCmd::Enumerate(QArg { q }) => {
            let c = ff::enumerate_gl2(&prime_power(*q)?, ff::ENUMERATION_GUARD)?;
            Report::record(vec![
                ("counted_order", Cell::int(c.counted_order)),
                ("counted_borel", Cell::int(c.counted_borel)),
            ])
        }
        FfCmd::Regular { q, a } => {
            let q = prime_power(*q)?;
            Report::scalar(Cell::Bool(ff::is_regular(
                &q,
                &CharacterIndex::new(&q, *a)?,
            )))
        }
        FfCmd::CountRegular { q, nu } => Report::scalar(Cell::int(ff::count_regular_characters(
            &prime_power(*q)?,
            nu.parse::<NuIndex>()?,
        )?)),
        FfCmd::BruteRegular { q, nu } => Report::scalar(Cell::int(
            ff::brute_force_regular_characters(&prime_power(*q)?, nu.parse::<NuIndex>()?)?,
        )),
        FfCmd::Normtrace(QArg { q }) => {
            let f = ff::norm_trace_facts(&prime_power(*q)?)?;
            Report::record(vec![
                ("norm_surjective", Cell::Bool(f.norm_surjective)),
                ("trace_surjective", Cell::Bool(f.trace_surjective)),
                ("norm_kernel_size", Cell::int(f.norm_kernel_size)),
                ("hilbert90_image_size", Cell::int(f.hilbert90_image_size)),
            ])
        }
        FfCmd::Repdims(QArg { q }) => {
            let d = ff::finite_rep_dims(&prime_power(*q)?);
            Report::record(vec![
                ("principal_series_dim", Cell::int(d.principal_series_dim)),
                ("cuspidal_dim", Cell::int(d.cuspidal_dim)),
                ("steinberg_dim", Cell::int(d.steinberg_dim)),
            ])
        }
    })
}

fn padic_cmd(cmd: &PadicCmd) -> Result<Report> {
    let norm = |n: &NormArg| n.norm.parse::<HaarNormalization>();
    Ok(match cmd {
        PadicCmd::Valuation { r, p } => {
            let r = rational(r)?;
            Report::record(vec![
                (
                    "valuation",
                    Cell::Valuation(padic::padic_valuation(&r, *p)?),
                ),
                ("abs", Cell::rat(padic::padic_abs(&r, *p)?)),
            ])
        }
        PadicCmd::Ultrametric { r, s, p } => Report::scalar(Cell::Bool(padic::ultrametric_check(
            &rational(r)?,
            &rational(s)?,
            *p,
        )?)),
        PadicCmd::Level { n, e } => {
            let l = padic::extension_level_arithmetic(*n, *e)?;
            Report::record(vec![
                ("composed_level", Cell::int(l.composed_level)),
                ("trace_ideal_exponent", Cell::int(l.trace_ideal_exponent)),
            ])
        }
        PadicCmd::Quadext { p } => Report::scalar(Cell::int(padic::quadratic_extension_count(*p)?)),
        PadicCmd::Weyl { l } => Report::table(
            &["length", "word"],
            padic::weyl_enumerate(*l)
                .iter()
                .map(|w| vec![Cell::int(w.length()), Cell::text(w.to_string())])
                .collect(),
        ),
        PadicCmd::Weylsum { q, l } => {
            let q = prime_power(*q)?;
            let partial = padic::weyl_partial_sum(&q, *l);
            let closed = padic::weyl_closed_form(&q);
            Report::record(vec![
                ("partial_sum", Cell::rat(partial.clone())),
                ("closed_form", Cell::rat(closed.clone())),
                ("tail", Cell::rat(closed - partial)),
            ])
        }
        PadicCmd::Haar { q, norm: n } => {
            let v = padic::haar_volumes(&prime_power(*q)?, norm(n)?);
            Report::record(vec![
                ("vol_iz", Cell::rat(v.vol_iz)),
                ("vol_kz", Cell::rat(v.vol_kz)),
            ])
        }
        PadicCmd::Steinberg { q, norm: n } => Report::scalar(Cell::rat(
            padic::steinberg_formal_dim(&prime_power(*q)?, norm(n)?),
        )),
        PadicCmd::Depthzero { q, norm: n } => Report::scalar(Cell::rat(
            padic::depth_zero_formal_dim(&prime_power(*q)?, norm(n)?),
        )),
        PadicCmd::Lattice { q, n } => {
            let l = padic::ihara_lattice(&prime_power(*q)?, *n)?;
            Report::record(vec![
                ("q", Cell::int(l.q().q())),
                ("rank", Cell::int(l.rank())),
                ("h", Cell::int(l.double_cosets())),
            ])
        }
        PadicCmd::Covolume { q, n, norm: nm } => Report::scalar(Cell::rat(
            padic::lattice_covolume(&prime_power(*q)?, *n, norm(nm)?)?,
        )),
        PadicCmd::Vndim {
            q,
            n,
            rep,
            norm: nm,
        } => Report::scalar(Cell::rat(padic::vn_dimension_padic(
            &prime_power(*q)?,
            *n,
            rep.parse::<RepKind>()?,
            norm(nm)?,
        )?)),
        PadicCmd::Jl { p, class } => {
            let p = prime_power(*p)?;
            Report::scalar(Cell::Int(
                padic::jl_formal_dim(&p, class.parse::<JLClass>()?)?.into(),
            ))
        }
    })
}
