mod latex;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use chalg::algebra::{multiply, AlgebraTag, GradedBialgebra};
use chalg::bases::{
    ck_r_to_s, ck_s_to_r, endo_r_to_s, endo_s_to_r, forest_r_to_s, forest_s_to_r, r_multiply_endo,
    r_multiply_forest, Basis,
};
use chalg::forests::{Ck, Ho, Nck};
use chalg::functions::{Efsym, Sgsym};
use chalg::json::{self, AnyElement, Document};
use chalg::morphisms::{ck_projection, forest_to_endo_element, pi_hopf, plane_to_ordered_element};
use chalg::realization::{realize, Version};
use chalg::structures::{Bounds, DEFAULT_ENUMERATION_BOUND};
use chalg::verify::{self, Options, Suite};
use chalg::words::Wqsym;
use chalg::{Endofunction, Int, OrderedForest, Permutation, Polynomial, Tensor};

const DEFAULT_INDICES: i32 = 8;

#[derive(Parser)]
#[command(
    name = "chalg",
    version,
    about = "Exact computation in combinatorial Hopf algebras"
)]
struct Cli {
    /// TOML file setting `bound` and `indices`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two elements; `-` reads from stdin.
    Product {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        basis: Option<String>,
        x: PathBuf,
        y: PathBuf,
    },
    /// Coproduct in the natural basis.
    Coproduct {
        #[arg(long)]
        algebra: String,
        x: PathBuf,
    },
    BasisChange {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        algebra: String,
        x: PathBuf,
    },
    /// Polynomial realization of one basis element.
    Realize {
        #[arg(long)]
        version: String,
        #[arg(long)]
        indices: Option<i32>,
        #[arg(long)]
        object: String,
    },
    Morphism {
        #[arg(long, value_enum)]
        map: MapName,
        x: PathBuf,
    },
    /// Dimensions of the homogeneous components.
    Dims {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        max_degree: usize,
    },
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Pi,
    #[value(name = "f_F", alias = "f-f")]
    FF,
    Ck,
    Plane,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    bound: Option<usize>,
    indices: Option<i32>,
}

impl Config {
    fn load(path: Option<&Path>) -> anyhow::Result<Config> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("config {}", path.display()))
    }

    fn bounds(&self) -> Bounds {
        Bounds::new(self.bound.unwrap_or(DEFAULT_ENUMERATION_BOUND))
    }
}

enum Outcome {
    Done,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_document(path: &Path) -> anyhow::Result<Document> {
    json::parse_document(&read_input(path)?).with_context(|| format!("in {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn line(s: String) -> String {
    s + "\n"
}

fn tag(text: &str) -> anyhow::Result<AlgebraTag> {
    Ok(text.parse()?)
}

fn basis(text: &str) -> anyhow::Result<Basis> {
    Ok(text.parse()?)
}

fn expect_tag(doc: &Document, want: AlgebraTag) -> anyhow::Result<()> {
    if doc.element.tag() != want {
        bail!("expected a {want} element, found {}", doc.element.tag());
    }
    Ok(())
}

fn expect_basis(doc: &Document, want: Basis) -> anyhow::Result<()> {
    if doc.basis != want {
        bail!(
            "expected an element in the {want} basis, found {}",
            doc.basis
        );
    }
    Ok(())
}

fn render_element(cli: &Cli, doc: &Document) -> String {
    match cli.format {
        Format::Json => doc.to_string_pretty(),
        Format::Latex => line(latex::any_element(doc.basis, &doc.element)),
    }
}

fn r_basis_error(t: AlgebraTag) -> anyhow::Error {
    anyhow!("{t} has no R basis; use Ho, CK or EFSym")
}

fn product(x: &Document, y: &Document, b: Basis) -> anyhow::Result<AnyElement> {
    use AnyElement as E;
    let s = b == Basis::natural(x.element.tag());
    Ok(match (&x.element, &y.element) {
        (E::Ho(a), E::Ho(c)) if s => E::Ho(multiply::<Ho, Int>(a, c)),
        (E::Ho(a), E::Ho(c)) => E::Ho(r_multiply_forest(a, c)),
        (E::Efsym(a), E::Efsym(c)) if s => E::Efsym(multiply::<Efsym, Int>(a, c)),
        (E::Efsym(a), E::Efsym(c)) => E::Efsym(r_multiply_endo(a, c)),
        (E::Ck(a), E::Ck(c)) if s => E::Ck(multiply::<Ck, Int>(a, c)),
        (E::Ck(a), E::Ck(c)) => E::Ck(ck_s_to_r(&multiply::<Ck, Int>(
            &ck_r_to_s(a),
            &ck_r_to_s(c),
        ))),
        (E::Nck(a), E::Nck(c)) if s => E::Nck(multiply::<Nck, Int>(a, c)),
        (E::Wqsym(a), E::Wqsym(c)) if s => E::Wqsym(multiply::<Wqsym, Int>(a, c)),
        (E::Sgsym(a), E::Sgsym(c)) if s => E::Sgsym(multiply::<Sgsym, Int>(a, c)),
        (a, _) => return Err(r_basis_error(a.tag())),
    })
}

fn to_natural(doc: &Document) -> anyhow::Result<AnyElement> {
    use AnyElement as E;
    let natural = Basis::natural(doc.element.tag());
    if doc.basis == natural {
        return Ok(doc.element.clone());
    }
    Ok(match (&doc.element, doc.basis) {
        (E::Ho(x), Basis::R) => E::Ho(forest_r_to_s(x)),
        (E::Ck(x), Basis::R) => E::Ck(ck_r_to_s(x)),
        (E::Efsym(x), Basis::R) => E::Efsym(endo_r_to_s(x)),
        (x, b) => bail!("{} elements cannot be written in the {b} basis", x.tag()),
    })
}

fn coproduct_text(cli: &Cli, x: &AnyElement) -> String {
    fn out<A: GradedBialgebra>(cli: &Cli, x: &chalg::Element<A::Key>) -> String
    where
        A::Key: latex::LatexKey,
    {
        let basis = Basis::natural(A::TAG);
        let d: Tensor<A::Key> = chalg::algebra::comultiply::<A, Int>(x);
        match cli.format {
            Format::Json => json::to_string_pretty(&json::tensor_to_json(A::TAG, basis, &d)),
            Format::Latex => line(latex::tensor(basis, &d)),
        }
    }
    match x {
        AnyElement::Ck(x) => out::<Ck>(cli, x),
        AnyElement::Nck(x) => out::<Nck>(cli, x),
        AnyElement::Ho(x) => out::<Ho>(cli, x),
        AnyElement::Wqsym(x) => out::<Wqsym>(cli, x),
        AnyElement::Sgsym(x) => out::<Sgsym>(cli, x),
        AnyElement::Efsym(x) => out::<Efsym>(cli, x),
    }
}

fn change_basis(doc: &Document, to: Basis) -> anyhow::Result<AnyElement> {
    use AnyElement as E;
    Ok(match (&doc.element, doc.basis, to) {
        (x, from, to) if from == to => x.clone(),
        (E::Ho(x), Basis::S, Basis::R) => E::Ho(forest_s_to_r(x)),
        (E::Ho(x), Basis::R, Basis::S) => E::Ho(forest_r_to_s(x)),
        (E::Ck(x), Basis::S, Basis::R) => E::Ck(ck_s_to_r(x)),
        (E::Ck(x), Basis::R, Basis::S) => E::Ck(ck_r_to_s(x)),
        (E::Efsym(x), Basis::S, Basis::R) => E::Efsym(endo_s_to_r(x)),
        (E::Efsym(x), Basis::R, Basis::S) => E::Efsym(endo_r_to_s(x)),
        (x, from, to) => bail!("no change of basis from {from} to {to} for {}", x.tag()),
    })
}

fn realize_object(version: Version, object: &str, n: i32) -> anyhow::Result<Polynomial> {
    let p = match version {
        Version::V1 | Version::V2 => realize(&object.parse::<OrderedForest>()?, version, n)?,
        Version::Func => realize(&object.parse::<Endofunction>()?, version, n)?,
        Version::Sg => realize(&object.parse::<Permutation>()?, version, n)?,
    };
    Ok(p)
}

fn morphism(map: MapName, doc: &Document) -> anyhow::Result<Document> {
    use AnyElement as E;
    let (want, out_basis) = match map {
        MapName::Pi | MapName::FF | MapName::Ck => (AlgebraTag::Ho, Basis::S),
        MapName::Plane => (AlgebraTag::Nck, Basis::S),
    };
    expect_tag(doc, want)?;
    expect_basis(doc, Basis::S)?;
    let element = match (&doc.element, map) {
        (E::Ho(x), MapName::Pi) => {
            return Ok(Document {
                basis: Basis::M,
                element: E::Wqsym(pi_hopf(x)),
            })
        }
        (E::Ho(x), MapName::FF) => E::Efsym(forest_to_endo_element(x)),
        (E::Ho(x), MapName::Ck) => E::Ck(ck_projection(x)),
        (E::Nck(x), MapName::Plane) => E::Ho(plane_to_ordered_element(x)),
        _ => unreachable!("tag checked above"),
    };
    Ok(Document {
        basis: out_basis,
        element,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let config = Config::load(cli.config.as_deref())?;
    let bounds = config.bounds();
    match &cli.command {
        Command::Product {
            algebra,
            basis: b,
            x,
            y,
        } => {
            let t = tag(algebra)?;
            let b = match b {
                Some(b) => basis(b)?,
                None => Basis::natural(t),
            };
            let (dx, dy) = (read_document(x)?, read_document(y)?);
            for d in [&dx, &dy] {
                expect_tag(d, t)?;
                expect_basis(d, b)?;
            }
            let doc = Document {
                basis: b,
                element: product(&dx, &dy, b)?,
            };
            emit(cli, &render_element(cli, &doc))?;
        }
        Command::Coproduct { algebra, x } => {
            let doc = read_document(x)?;
            expect_tag(&doc, tag(algebra)?)?;
            emit(cli, &coproduct_text(cli, &to_natural(&doc)?))?;
        }
        Command::BasisChange {
            from,
            to,
            algebra,
            x,
        } => {
            let t = tag(algebra)?;
            if !matches!(t, AlgebraTag::Ho | AlgebraTag::Ck | AlgebraTag::Efsym) {
                return Err(r_basis_error(t));
            }
            let doc = read_document(x)?;
            expect_tag(&doc, t)?;
            expect_basis(&doc, basis(from)?)?;
            let to = basis(to)?;
            let out = Document {
                basis: to,
                element: change_basis(&doc, to)?,
            };
            emit(cli, &render_element(cli, &out))?;
        }
        Command::Realize {
            version,
            indices,
            object,
        } => {
            let v: Version = version.parse()?;
            let n = indices.or(config.indices).unwrap_or(DEFAULT_INDICES);
            let p = realize_object(v, object, n)?;
            let text = match cli.format {
                Format::Json => json::to_string_pretty(&json::realization_to_json(v, n, &p)),
                Format::Latex => line(latex::polynomial(&p)),
            };
            emit(cli, &text)?;
        }
        Command::Morphism { map, x } => {
            let out = morphism(*map, &read_document(x)?)?;
            emit(cli, &render_element(cli, &out))?;
        }
        Command::Dims {
            algebra,
            max_degree,
        } => {
            let dims = verify::dimensions(tag(algebra)?, *max_degree, &bounds)?;
            let words: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            emit(cli, &line(words.join(" ")))?;
        }
        Command::Verify { suite, max_degree } => {
            let suite: Suite = suite.parse()?;
            let opts = Options {
                max_degree: *max_degree,
                n: config.indices.unwrap_or(DEFAULT_INDICES),
                bounds,
                ..Options::default()
            };
            let reports = verify::run_suite(suite, &opts)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&line(r.to_string()));
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            text.push_str(&line(format!(
                "{passed} of {} checks passed",
                reports.len()
            )));
            emit(cli, &text)?;
            if passed < reports.len() {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Done)
}
