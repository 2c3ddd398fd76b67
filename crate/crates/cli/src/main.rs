use std::io::{self, Read, Write};
use std::process::ExitCode;

use afftl_core::cells::{self, CensusRow, RightCellInvolution};
use afftl_core::diagram::render::{render, RenderFormat};
use afftl_core::enumerate::{enumerate_levels, max_elements, records};
use afftl_core::straighten::{straighten, straighten_traced};
use afftl_core::verify;
use afftl_core::{
    fc_evaluate, AffineDiagram, AlgebraElement, BasisElement, Error, GroupConfig, Word,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "afftl",
    version,
    about = "Explore the affine Temperley-Lieb algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
    Md,
}

#[derive(Args)]
struct WordArgs {
    /// Number of generators.
    #[arg(long)]
    n: usize,
    /// Letters separated by spaces or commas, e.g. "1 3 2 4".
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

impl WordArgs {
    fn parse(&self) -> Result<(GroupConfig, Word), Error> {
        let cfg = GroupConfig::new(self.n)?;
        let word = Word::parse(&self.word)?;
        cfg.check_word(&word)?;
        Ok((cfg, word))
    }

    fn element(&self) -> Result<(GroupConfig, BasisElement), Error> {
        let (cfg, word) = self.parse()?;
        let b = BasisElement::from_reduced_word(&cfg, &word)?;
        Ok((cfg, b))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a product of generators: exponent of [2] and canonical word.
    Eval {
        #[command(flatten)]
        w: WordArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include the diagram in JSON output.
        #[arg(long)]
        with_diagram: bool,
    },
    /// Multiply two algebra elements given as JSON (literal, @file or -).
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Reduced word of a diagram given as JSON (literal, @file or -).
    Straighten {
        #[arg(long)]
        diagram: String,
        /// Also list every congruence found and the letter it peeled.
        #[arg(long)]
        trace: bool,
    },
    /// Draw the diagram of a word.
    Diagram {
        #[command(flatten)]
        w: WordArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// The a-function of a reduced fully commutative word.
    Afn {
        #[command(flatten)]
        w: WordArgs,
        /// Compute from the definition over the commutation class instead.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Cell labels and census.
    Cells {
        #[command(subcommand)]
        command: CellsCommand,
    },
    /// Canonical decomposition of an involution.
    Involution {
        #[command(flatten)]
        w: WordArgs,
        /// Report the involution of the right cell of the word instead.
        #[arg(long)]
        right_cell: bool,
    },
    /// Stream every element up to a length as JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Run the property suites.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CellsCommand {
    Label {
        #[command(flatten)]
        w: WordArgs,
    },
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
    /// Verification ran but some property failed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(Error::Parse(e.to_string()))
    }
}

type Outcome = Result<(), Failure>;

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        Ok(std::fs::read_to_string(path)?)
    } else {
        Ok(arg.to_string())
    }
}

fn picture(d: &AffineDiagram, format: Format) -> Result<String, Failure> {
    match format {
        Format::Ascii => Ok(render(d, RenderFormat::Ascii)),
        Format::Svg => Ok(render(d, RenderFormat::Svg)),
        Format::Json => Ok(d.to_json() + "\n"),
        Format::Md => Err(Failure::Usage(
            "markdown output is only available for tables".into(),
        )),
    }
}

fn census_md(rows: &[CensusRow]) -> String {
    let mut s = String::from(
        "| two-sided | left cells | right cells | elements seen |\n|---|---|---|---|\n",
    );
    for r in rows {
        s.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.two_sided, r.left_cells, r.right_cells, r.elements_seen
        ));
    }
    s
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Eval {
            w,
            format,
            with_diagram,
        } => {
            let (cfg, word) = w.parse()?;
            let e = fc_evaluate(&cfg, &word)?;
            match format {
                Format::Json => {
                    let mut v = json!({ "exponent": e.exponent, "word": e.element.word() });
                    if with_diagram {
                        v["diagram"] =
                            serde_json::to_value(e.element.diagram()).expect("diagram serializes");
                    }
                    writeln!(out, "{v}")?;
                }
                Format::Ascii | Format::Svg => {
                    if format == Format::Ascii {
                        writeln!(out, "[2]^{} {}", e.exponent, e.element)?;
                    }
                    write!(out, "{}", picture(e.element.diagram(), format)?)?;
                }
                Format::Md => return Err(Failure::Usage("eval has no markdown output".into())),
            }
        }
        Command::Mul { left, right } => {
            let a = AlgebraElement::from_json(&read_input(&left)?)?;
            let b = AlgebraElement::from_json(&read_input(&right)?)?;
            writeln!(out, "{}", a.mul(&b)?.to_json())?;
        }
        Command::Straighten { diagram, trace } => {
            let d = AffineDiagram::from_json(&read_input(&diagram)?)?;
            if trace {
                let (sw, steps) = straighten_traced(&d)?;
                let steps: Vec<_> = steps
                    .iter()
                    .map(|(f, p)| json!({ "finding": f, "letter": p.letter, "end": p.end }))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "word": sw.word, "straight_core": sw.straight_core, "steps": steps })
                )?;
            } else {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&straighten(&d)?).expect("serializes")
                )?;
            }
        }
        Command::Diagram { w, format } => {
            let (cfg, word) = w.parse()?;
            let e = fc_evaluate(&cfg, &word)?;
            write!(out, "{}", picture(e.element.diagram(), format)?)?;
        }
        Command::Afn { w, bruteforce } => {
            let (cfg, b) = w.element()?;
            let a = if bruteforce {
                cells::a_bruteforce(
                    &cfg,
                    b.word(),
                    cells::BRUTEFORCE_BOUND,
                    cells::FactorReading::Contiguous,
                )?
            } else {
                cells::a_value(&b)
            };
            writeln!(out, "{a}")?;
        }
        Command::Cells {
            command: CellsCommand::Label { w },
        } => {
            let (cfg, b) = w.element()?;
            let l = cells::labels(&cfg, &b)?;
            writeln!(out, "{}", serde_json::to_string(&l).expect("serializes"))?;
        }
        Command::Cells {
            command:
                CellsCommand::Census {
                    n,
                    max_len,
                    format,
                    workers,
                },
        } => {
            let cfg = GroupConfig::new(n)?;
            let rows = cells::census(&cfg, max_len, workers)?;
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&rows).expect("serializes"))?
                }
                Format::Md => write!(out, "{}", census_md(&rows))?,
                _ => return Err(Failure::Usage("census output is json or md".into())),
            }
        }
        Command::Involution { w, right_cell } => {
            let (cfg, b) = w.element()?;
            if right_cell {
                let v = match cells::right_cell_involution(&cfg, &b)? {
                    RightCellInvolution::Involution(d) => json!({ "involution": d }),
                    RightCellInvolution::NoInvolution => {
                        json!({ "involution": null, "marker": "M-nonsquare cell" })
                    }
                };
                writeln!(out, "{v}")?;
            } else {
                let d = cells::involution_decompose(&cfg, &b)?;
                writeln!(out, "{}", serde_json::to_string(&d).expect("serializes"))?;
            }
        }
        Command::Enumerate {
            n,
            max_len,
            workers,
        } => {
            let cfg = GroupConfig::new(n)?;
            for level in enumerate_levels(&cfg, max_len, max_elements(), workers)? {
                for r in records(&cfg, &level, workers)? {
                    writeln!(out, "{}", serde_json::to_string(&r).expect("serializes"))?;
                }
            }
        }
        Command::Verify {
            n,
            max_len,
            seed,
            format,
        } => {
            let checks = verify::run_all(n, max_len, seed)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&checks).expect("serializes")
                )?,
                _ => {
                    for c in &checks {
                        writeln!(
                            out,
                            "[{}] {}: {}",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        )?;
                    }
                }
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
