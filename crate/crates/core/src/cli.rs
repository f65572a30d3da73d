//! Command-line front end. Exit codes: 0 success, 1 refuted certificate,
//! 2 input error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{artinian_reduction, hochster_betti, koszul_betti, socle_dims, Variant};
use crate::builder::Builder;
use crate::complex::Face;
use crate::error::{Error, Result};
use crate::geom::{EmbeddedComplex, EmbeddedComplexJson};
use crate::stress::{participation_witness, rigidity_report, squarefree_part, stress_space};
use crate::verify::{run_catalog, verify_claim, Instance, Status};

#[derive(Parser, Debug)]
#[command(name = "stresslab", version, about = "Affine stresses, Artinian reductions and Betti tables of simplicial polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Embedded complex in JSON form.
    #[arg(long = "in", value_name = "F")]
    input: Option<PathBuf>,
    /// Builder string, e.g. "cyclic:d=5,n=8".
    #[arg(long, value_name = "S")]
    builder: Option<String>,
}

impl Source {
    fn load(&self) -> Result<(String, EmbeddedComplex)> {
        match (&self.input, &self.builder) {
            (Some(path), _) => {
                let text = fs::read_to_string(path)?;
                let j: EmbeddedComplexJson = serde_json::from_str(&text)?;
                Ok((path.display().to_string(), EmbeddedComplex::from_json(&j)?))
            }
            (None, Some(spec)) => {
                let b: Builder = spec.parse()?;
                Ok((b.to_string(), b.build()?))
            }
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingChoice {
    R,
    Rbar,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an instance and write it as JSON.
    Build {
        #[arg(long, value_name = "S")]
        builder: String,
        #[arg(long, value_name = "F")]
        out: PathBuf,
    },
    /// Dimension of the degree-i stress space, optionally with face participation.
    Stress {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "i")]
        degree: usize,
        #[arg(long, value_name = "a,b", conflicts_with = "face")]
        edge: Option<String>,
        #[arg(long, value_name = "a,b,c")]
        face: Option<String>,
        /// Write the stress basis as JSON.
        #[arg(long, value_name = "F")]
        dump: Option<PathBuf>,
    },
    /// Graded Betti tables over R and/or over the reduced ring.
    Betti {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "both")]
        ring: RingChoice,
    },
    /// Socle dimensions of R/(I + (Θ, ℓ)).
    Socle {
        #[command(flatten)]
        source: Source,
    },
    /// f-, h-, g- and missing-face vectors.
    Gvector {
        #[command(flatten)]
        source: Source,
    },
    /// Infinitesimal rigidity of the graph.
    Rigidity {
        #[command(flatten)]
        source: Source,
    },
    /// Run a claim (or "all") on its catalog or on one instance.
    Verify {
        #[arg(long, value_name = "ID")]
        claim: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Single instance instead of the claim's catalog.
        #[arg(long, value_name = "S")]
        builder: Option<String>,
    },
}

fn parse_face(s: &str) -> Result<Face> {
    let vs = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad vertex list {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Face::from_vertices(vs))
}

fn header(instance: &str, seed: u64) {
    println!("instance: {instance}");
    println!("seed: {seed}");
}

fn seed_of(instance: &str) -> u64 {
    match instance.parse::<Builder>() {
        Ok(Builder::JoinSimplices { seed, .. } | Builder::Random { seed, .. }) => seed,
        _ => 0,
    }
}

fn execute(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Build { builder, out } => {
            let b: Builder = builder.parse()?;
            let ec = b.build()?;
            fs::write(&out, serde_json::to_string_pretty(&ec.to_json())?)?;
            header(&b.to_string(), seed_of(&builder));
            println!("wrote {} ({} vertices, {} facets)", out.display(), ec.n(), ec.complex.facets().len());
        }
        Command::Stress { source, degree, edge, face, dump } => {
            let (name, ec) = source.load()?;
            header(&name, seed_of(&name));
            let sb = stress_space(&ec, degree);
            println!("dim S_{degree} = {}", sb.dim());
            if let Some(spec) = edge.or(face) {
                let f = parse_face(&spec)?;
                let witness = participation_witness(&ec, degree, f)?;
                println!("participates: {}", witness.is_some());
                if let Some(lam) = witness {
                    let w = squarefree_part(&sb, &lam);
                    let weights: serde_json::Map<String, serde_json::Value> = w
                        .weights
                        .iter()
                        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                        .map(|(f, x)| (f.to_string(), json!(crate::exactla::format_rational(x))))
                        .collect();
                    println!("witness: {}", serde_json::Value::Object(weights));
                }
            }
            if let Some(path) = dump {
                fs::write(&path, serde_json::to_string_pretty(&sb.dump())?)?;
                println!("wrote {}", path.display());
            }
        }
        Command::Betti { source, ring } => {
            let (name, ec) = source.load()?;
            header(&name, seed_of(&name));
            if matches!(ring, RingChoice::R | RingChoice::Both) {
                println!("over R:");
                print!("{}", hochster_betti(&ec.complex)?.render());
            }
            if matches!(ring, RingChoice::Rbar | RingChoice::Both) {
                println!("over Rbar:");
                print!("{}", koszul_betti(&artinian_reduction(&ec, Variant::ThetaEll)?).render());
            }
        }
        Command::Socle { source } => {
            let (name, ec) = source.load()?;
            header(&name, seed_of(&name));
            let r = socle_dims(&artinian_reduction(&ec, Variant::ThetaEll)?);
            println!("socle: {}", json!(r));
        }
        Command::Gvector { source } => {
            let (name, ec) = source.load()?;
            header(&name, seed_of(&name));
            let v = ec.complex.fgm_vectors();
            println!("f: {}", json!(v.f));
            println!("h: {}", json!(v.h));
            println!("g: {}", json!(v.g));
            println!("m: {}", json!(v.m));
        }
        Command::Rigidity { source } => {
            let (name, ec) = source.load()?;
            header(&name, seed_of(&name));
            println!("{}", serde_json::to_string(&rigidity_report(&ec))?);
        }
        Command::Verify { claim, seed, builder } => {
            let certs = match builder {
                Some(spec) => {
                    let inst = Instance::new(spec.parse()?)?;
                    if claim == "all" {
                        crate::verify::CLAIMS.iter().map(|c| verify_claim(c, &inst)).collect::<Result<Vec<_>>>()?
                    } else {
                        vec![verify_claim(&claim, &inst)?]
                    }
                }
                None => run_catalog(&claim, seed)?,
            };
            println!("seed: {seed}");
            for c in &certs {
                println!("{}", serde_json::to_string(c)?);
            }
            for c in &certs {
                println!("{}", c.summary_line());
            }
            let refuted = certs.iter().filter(|c| c.status == Status::Refuted).count();
            println!("{} certificates, {refuted} refuted", certs.len());
            return Ok(if refuted > 0 { 1 } else { 0 });
        }
    }
    Ok(0)
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
