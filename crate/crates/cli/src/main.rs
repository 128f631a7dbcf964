//! `algkit`: checks and constructions on algebra documents.
//!
//! Exit status: 0 when every check holds, 1 when a mathematical check fails
//! (the report names the failing basis tuple), 2 for malformed input or
//! usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use algkit::cocycles::{
    canonical_twisted_factorization, induce_from_twisted_rb, induced_representation, verify_poisson_2cocycle,
    verify_representation, verify_twisted_rb, CocyclePair, Representation,
};
use algkit::deformations::{graded_from_filtration, semiclassical_limit, verify_deformation, verify_ns_lie_filtration, Filtration};
use algkit::graded::{
    graded_deform_by_nijenhuis, graded_induce_from_nijenhuis, graded_subadjacent, verify_graded, verify_graded_nijenhuis,
    GradedPresentation,
};
use algkit::io::{self as doc, Bindings, Document};
use algkit::operators::{deform_by_nijenhuis, induce_from_nijenhuis, induce_from_reynolds, nijenhuis_hierarchy, verify_operator, OperatorRole};
use algkit::structures::{defect_table, embed, hertling_manin_table, subadjacent};
use algkit::{verify_structure, Error, Kind, Matrix, Presentation, Space, VerificationReport};

#[derive(Parser)]
#[command(name = "algkit", version, about = "Exact checks and constructions for Poisson-type algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Bind a document parameter, e.g. `--set a=1/2`. Repeatable.
    #[arg(long = "set", value_name = "NAME=VALUE", global = true)]
    set: Vec<String>,
    /// Write the output document here instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    /// Write the report here instead of stderr.
    #[arg(long, value_name = "FILE", global = true)]
    report: Option<PathBuf>,
    /// Render the report as text rather than JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Verify inputs before constructing (the default).
    #[arg(long, global = true, overrides_with = "no_strict")]
    strict: bool,
    /// Skip input verification in constructions.
    #[arg(long, global = true)]
    no_strict: bool,
    /// Worker threads for verification; also read from ALGKIT_THREADS.
    #[arg(long, value_name = "N", global = true, env = "ALGKIT_THREADS")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an algebra, graded algebra, deformation or factorization.
    Check { file: String },
    /// Verify an operator identity.
    OpCheck {
        algebra: String,
        operator: String,
        #[arg(long = "as", value_name = "ROLE")]
        role: String,
    },
    /// Build the split structure induced by an operator.
    Induce {
        algebra: String,
        operator: String,
        #[arg(long, value_name = "ROLE")]
        via: String,
    },
    /// Deform every product by a Nijenhuis operator.
    DeformBy { algebra: String, operator: String },
    /// The subadjacent algebra of a split structure.
    Subadjacent { algebra: String },
    /// Check the powers of a Nijenhuis operator and their induced structures.
    Hierarchy {
        algebra: String,
        operator: String,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        powers: Vec<u32>,
    },
    /// Verify a representation.
    RepCheck { algebra: String, representation: String },
    /// Verify a 2-cocycle pair.
    CocycleCheck {
        algebra: String,
        representation: String,
        cocycle: String,
    },
    /// Verify a twisted Rota-Baxter operator.
    TwistedCheck {
        algebra: String,
        representation: String,
        cocycle: String,
        operator: String,
    },
    /// Build the split structure induced by a twisted Rota-Baxter operator.
    TwistedInduce {
        algebra: String,
        representation: String,
        cocycle: String,
        operator: String,
    },
    /// Present a split Poisson algebra as induced by a twisted Rota-Baxter operator.
    Factorize { algebra: String },
    /// The semi-classical limit of a deformation.
    Limit { deformation: String },
    /// Check the filtration conditions.
    FiltrationCheck { algebra: String, filtration: String },
    /// The structure on the associated graded space of a filtration.
    Grade { algebra: String, filtration: String },
    /// View an algebra as a richer kind.
    Embed {
        algebra: String,
        #[arg(long = "as", value_name = "KIND")]
        kind: String,
    },
    /// Nonzero values of the three F-manifold defects on basis triples.
    Defects { algebra: String },
    /// Nonzero values of the Hertling-Manin map on basis triples.
    Hm { algebra: String },
    /// The subadjacent algebra with its representation on the same space.
    InducedRep { algebra: String },
}

/// What a command produced.
#[derive(Default)]
struct Outcome {
    document: Option<Value>,
    reports: Vec<VerificationReport>,
    /// Overrides the report document, for reports with extra fields.
    report_value: Option<Value>,
}

impl Outcome {
    fn document(v: Value) -> Self {
        Outcome {
            document: Some(v),
            ..Default::default()
        }
    }

    fn reports(reports: Vec<VerificationReport>) -> Self {
        Outcome {
            reports,
            ..Default::default()
        }
    }
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Ctx {
    bindings: Bindings,
    strict: bool,
}

impl Ctx {
    fn load(&self, path: &str) -> Res<Document> {
        let text = if path == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
        };
        Ok(doc::parse_document(&text, &self.bindings)?)
    }

    fn algebra(&self, path: &str) -> Res<Presentation> {
        match self.load(path)? {
            Document::Algebra(a) => Ok(a),
            d => Err(wrong(path, "algebra", &d)),
        }
    }

    fn any_algebra(&self, path: &str) -> Res<Either> {
        match self.load(path)? {
            Document::Algebra(a) => Ok(Either::Plain(a)),
            Document::GradedAlgebra(g) => Ok(Either::Graded(g)),
            d => Err(wrong(path, "algebra or graded-algebra", &d)),
        }
    }

    /// A linear map from `source` to `target`, given as an operator or a
    /// module-map document whose bases match.
    fn map(&self, path: &str, source: &Space, target: &Space) -> Res<Matrix> {
        let (s, t, m) = match self.load(path)? {
            Document::Operator { space, matrix } => (space.clone(), space, matrix),
            Document::ModuleMap { source, target, matrix } => (source, target, matrix),
            d => return Err(wrong(path, "operator or module-map", &d)),
        };
        if s.names() != source.names() || t.names() != target.names() {
            return Err(Failure::Engine(Error::dim(format!(
                "{path} maps [{}] to [{}], expected [{}] to [{}]",
                s.names().join(", "),
                t.names().join(", "),
                source.names().join(", "),
                target.names().join(", ")
            ))));
        }
        Ok(m)
    }

    fn representation(&self, path: &str, algebra: &Space) -> Res<Representation> {
        match self.load(path)? {
            Document::Representation { algebra: a, representation } => {
                same_basis(path, &a, algebra)?;
                Ok(representation)
            }
            d => Err(wrong(path, "representation", &d)),
        }
    }

    fn cocycle(&self, path: &str, algebra: &Space, module: &Space) -> Res<CocyclePair> {
        match self.load(path)? {
            Document::Cocycle { algebra: a, module: v, pair } => {
                same_basis(path, &a, algebra)?;
                same_basis(path, &v, module)?;
                Ok(pair)
            }
            d => Err(wrong(path, "cocycle", &d)),
        }
    }

    fn filtration(&self, path: &str, algebra: &Space) -> Res<Filtration> {
        match self.load(path)? {
            Document::Filtration(f) => {
                same_basis(path, f.space(), algebra)?;
                Ok(f)
            }
            d => Err(wrong(path, "filtration", &d)),
        }
    }
}

enum Either {
    Plain(Presentation),
    Graded(GradedPresentation),
}

fn wrong(path: &str, expected: &str, got: &Document) -> Failure {
    Failure::Engine(Error::doc(format!("{path}: expected a {expected} document, found {}", got.tag())))
}

fn same_basis(path: &str, found: &Space, expected: &Space) -> Res<()> {
    if found.names() == expected.names() {
        Ok(())
    } else {
        Err(Failure::Engine(Error::dim(format!(
            "{path} uses basis [{}], expected [{}]",
            found.names().join(", "),
            expected.names().join(", ")
        ))))
    }
}

fn role(s: &str) -> Res<OperatorRole> {
    OperatorRole::from_tag(s).map_err(|_| Failure::Usage(format!("unknown role `{s}` (nijenhuis, reynolds, derivation)")))
}

fn run(cmd: Command, ctx: &Ctx) -> Res<Outcome> {
    use Command::*;
    let strict = ctx.strict;
    Ok(match cmd {
        Check { file } => match ctx.load(&file)? {
            Document::Algebra(a) => Outcome::reports(vec![verify_structure(&a)]),
            Document::GradedAlgebra(g) => Outcome::reports(vec![verify_graded(&g)]),
            Document::Deformation(d) => Outcome::reports(vec![verify_deformation(&d)?]),
            Document::Factorization(f) => {
                let a = &f.algebra;
                Outcome::reports(vec![
                    verify_structure(a),
                    verify_representation(a, &f.representation)?,
                    verify_poisson_2cocycle(a, &f.representation, &f.cocycle)?,
                    verify_twisted_rb(a, &f.representation, &f.cocycle, &f.operator)?,
                ])
            }
            d => {
                return Err(Failure::Usage(format!(
                    "check takes an algebra, graded-algebra, deformation or factorization document, not {}",
                    d.tag()
                )))
            }
        },
        OpCheck { algebra, operator, role: r } => {
            let r = role(&r)?;
            match ctx.any_algebra(&algebra)? {
                Either::Plain(a) => {
                    let m = ctx.map(&operator, a.space(), a.space())?;
                    Outcome::reports(vec![verify_operator(&a, &m, r)?])
                }
                Either::Graded(g) if r == OperatorRole::Nijenhuis => {
                    let m = ctx.map(&operator, g.space(), g.space())?;
                    Outcome::reports(vec![verify_graded_nijenhuis(&g, &m)?])
                }
                Either::Graded(_) => return Err(Failure::Usage("graded algebras support only --as nijenhuis".into())),
            }
        }
        Induce { algebra, operator, via } => {
            let r = role(&via)?;
            match (ctx.any_algebra(&algebra)?, r) {
                (Either::Plain(a), OperatorRole::Nijenhuis) => {
                    let m = ctx.map(&operator, a.space(), a.space())?;
                    Outcome::document(doc::algebra_value(&induce_from_nijenhuis(&a, &m, strict)?))
                }
                (Either::Plain(a), OperatorRole::Reynolds) => {
                    let m = ctx.map(&operator, a.space(), a.space())?;
                    Outcome::document(doc::algebra_value(&induce_from_reynolds(&a, &m, strict)?))
                }
                (Either::Graded(g), OperatorRole::Nijenhuis) => {
                    let m = ctx.map(&operator, g.space(), g.space())?;
                    Outcome::document(doc::graded_value(&graded_induce_from_nijenhuis(&g, &m, strict)?))
                }
                _ => return Err(Failure::Usage(format!("cannot induce via `{via}` here"))),
            }
        }
        DeformBy { algebra, operator } => match ctx.any_algebra(&algebra)? {
            Either::Plain(a) => {
                let m = ctx.map(&operator, a.space(), a.space())?;
                Outcome::document(doc::algebra_value(&deform_by_nijenhuis(&a, &m, strict)?))
            }
            Either::Graded(g) => {
                let m = ctx.map(&operator, g.space(), g.space())?;
                Outcome::document(doc::graded_value(&graded_deform_by_nijenhuis(&g, &m)?))
            }
        },
        Subadjacent { algebra } => match ctx.any_algebra(&algebra)? {
            Either::Plain(a) => Outcome::document(doc::algebra_value(&subadjacent(&a)?)),
            Either::Graded(g) => Outcome::document(doc::graded_value(&graded_subadjacent(&g)?)),
        },
        Hierarchy { algebra, operator, powers } => {
            let a = ctx.algebra(&algebra)?;
            let m = ctx.map(&operator, a.space(), a.space())?;
            let h = nijenhuis_hierarchy(&a, &m, &powers)?;
            Outcome {
                reports: h.sections(),
                report_value: Some(doc::hierarchy_value(&h)),
                ..Default::default()
            }
        }
        RepCheck { algebra, representation } => {
            let a = ctx.algebra(&algebra)?;
            let rep = ctx.representation(&representation, a.space())?;
            Outcome::reports(vec![verify_representation(&a, &rep)?])
        }
        CocycleCheck { algebra, representation, cocycle } => {
            let a = ctx.algebra(&algebra)?;
            let rep = ctx.representation(&representation, a.space())?;
            let c = ctx.cocycle(&cocycle, a.space(), rep.module())?;
            Outcome::reports(vec![verify_poisson_2cocycle(&a, &rep, &c)?])
        }
        TwistedCheck { algebra, representation, cocycle, operator } => {
            let a = ctx.algebra(&algebra)?;
            let rep = ctx.representation(&representation, a.space())?;
            let c = ctx.cocycle(&cocycle, a.space(), rep.module())?;
            let r = ctx.map(&operator, rep.module(), a.space())?;
            Outcome::reports(vec![verify_twisted_rb(&a, &rep, &c, &r)?])
        }
        TwistedInduce { algebra, representation, cocycle, operator } => {
            let a = ctx.algebra(&algebra)?;
            let rep = ctx.representation(&representation, a.space())?;
            let c = ctx.cocycle(&cocycle, a.space(), rep.module())?;
            let r = ctx.map(&operator, rep.module(), a.space())?;
            Outcome::document(doc::algebra_value(&induce_from_twisted_rb(&a, &rep, &c, &r, strict)?))
        }
        Factorize { algebra } => {
            let a = ctx.algebra(&algebra)?;
            Outcome::document(doc::factorization_value(&canonical_twisted_factorization(&a, strict)?))
        }
        Limit { deformation } => match ctx.load(&deformation)? {
            Document::Deformation(d) => Outcome::document(doc::algebra_value(&semiclassical_limit(&d)?)),
            d => return Err(wrong(&deformation, "deformation", &d)),
        },
        FiltrationCheck { algebra, filtration } => {
            let a = ctx.algebra(&algebra)?;
            let f = ctx.filtration(&filtration, a.space())?;
            Outcome::reports(vec![verify_ns_lie_filtration(&a, &f)?])
        }
        Grade { algebra, filtration } => {
            let a = ctx.algebra(&algebra)?;
            let f = ctx.filtration(&filtration, a.space())?;
            Outcome::document(doc::algebra_value(&graded_from_filtration(&a, &f)?.presentation))
        }
        Embed { algebra, kind } => {
            let a = ctx.algebra(&algebra)?;
            let k = Kind::from_tag(&kind).map_err(|_| Failure::Usage(format!("unknown kind `{kind}`")))?;
            Outcome::document(doc::algebra_value(&embed(&a, k)?))
        }
        Defects { algebra } => {
            let a = ctx.algebra(&algebra)?;
            Outcome::document(doc::defect_table_value(a.space(), &defect_table(&a)?))
        }
        Hm { algebra } => {
            let a = ctx.algebra(&algebra)?;
            Outcome::document(doc::defect_table_value(a.space(), &hertling_manin_table(&a)?))
        }
        InducedRep { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let (sub, rep) = induced_representation(&a)?;
            Outcome::document(doc::representation_value(sub.space(), &rep))
        }
    })
}

fn write_to(path: Option<&PathBuf>, text: &str, stderr: bool) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", p.display()))),
        None if stderr => io::stderr().write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn emit_reports(g: &Global, reports: &[VerificationReport], value: Option<Value>) -> Res<()> {
    let text = if g.text {
        doc::to_text(reports)
    } else {
        doc::to_canonical_string(&value.unwrap_or_else(|| doc::reports_value(reports)))
    };
    write_to(g.report.as_ref(), &text, true)
}

fn execute(cli: Cli) -> Res<bool> {
    let g = &cli.global;
    if let Some(n) = g.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut bindings = Bindings::new();
    for s in &g.set {
        let (name, value) = doc::parse_binding(s).map_err(|e| Failure::Usage(e.to_string()))?;
        if bindings.insert(name.clone(), value).is_some() {
            return Err(Failure::Usage(format!("parameter `{name}` set twice")));
        }
    }
    let ctx = Ctx {
        bindings,
        strict: !g.no_strict,
    };
    match run(cli.command, &ctx) {
        Ok(out) => {
            if let Some(doc) = &out.document {
                write_to(g.out.as_ref(), &doc::to_canonical_string(doc), false)?;
            }
            let holds = out.reports.iter().all(VerificationReport::holds);
            if !out.reports.is_empty() {
                emit_reports(g, &out.reports, out.report_value)?;
            }
            Ok(holds)
        }
        Err(Failure::Engine(Error::Precondition { what, report })) => {
            let mut report = *report;
            report.note(format!("precondition failed: {what}"));
            emit_reports(g, &[report], None)?;
            Ok(false)
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
