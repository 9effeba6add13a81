use std::fs::File;
use std::io::{self, BufReader};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quotvi::job::{self, ClosedForm, EvalPath, Insertions, JobError, JobRequest, JobResult, Mode};

#[derive(Parser)]
#[command(
    name = "quotvi",
    version,
    about = "Exact virtual counts of maps from curves to Grassmannians and their complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Closed,
    #[value(alias = "phi-expansion")]
    Phi,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Projective,
    Lg24,
}

#[derive(Subcommand)]
enum Command {
    /// Run one computation.
    Compute {
        /// grassmannian, hypersurface, complete-intersection, closed-form,
        /// duality-check, b-reduce, tevelev or oracle-check
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Hypersurface degrees, comma separated.
        #[arg(long, value_delimiter = ',')]
        l: Vec<u32>,
        /// Insertions such as `a1:4,a2:1` (Chern) or `s3:2` (Segre).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        ins: String,
        #[arg(long, value_enum, default_value = "closed")]
        path: PathArg,
        /// Closed form to evaluate; inferred from --m1/--m2 when omitted.
        #[arg(long, value_enum)]
        form: Option<FormArg>,
        #[arg(long)]
        m1: Option<u32>,
        #[arg(long)]
        m2: Option<u32>,
        /// `j` of each b-class pair, comma separated.
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<u32>,
        /// Point conditions for `tevelev`; derived from the dimension when omitted.
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a file of JSON requests, one per line (`-` reads stdin).
    Batch {
        file: String,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run a named example; without a name, list them.
    Preset {
        name: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn emit(res: &JobResult, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(res).expect("results serialize")),
        Format::Text => println!("{}", res.render_text()),
    }
}

fn run_one(req: &JobRequest, workers: usize, format: Format) -> ExitCode {
    match job::run(req, workers) {
        Ok(res) => {
            emit(&res, format);
            match &res.paths {
                Some(p) if p.failed() => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(err) => {
            let rec = JobError::new(req.id.clone(), &err);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&rec).expect("errors serialize"))
                }
                Format::Text => eprintln!("error ({}): {}", rec.error, rec.message),
            }
            ExitCode::from(rec.exit_code as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            mode,
            g,
            d,
            r,
            n,
            l,
            ins,
            path,
            form,
            m1,
            m2,
            pairs,
            t,
            workers,
            format,
        } => {
            let req = JobRequest {
                id: None,
                mode: Some(mode),
                g: Some(g),
                d,
                r,
                n,
                l,
                ins: Insertions::Text(ins),
                workers,
                path: match path {
                    PathArg::Closed => EvalPath::Closed,
                    PathArg::Phi => EvalPath::Phi,
                    PathArg::Both => EvalPath::Both,
                },
                form: form.map(|f| match f {
                    FormArg::Projective => ClosedForm::Projective,
                    FormArg::Lg24 => ClosedForm::Lg24,
                }),
                m1,
                m2,
                pairs,
                t,
            };
            run_one(&req, job::default_workers(), format)
        }
        Command::Batch { file, workers } => {
            let workers = workers.unwrap_or_else(job::default_workers);
            let stdout = io::stdout().lock();
            let result = if file == "-" {
                job::batch(io::stdin().lock(), stdout, workers)
            } else {
                match File::open(&file) {
                    Ok(f) => job::batch(BufReader::new(f), stdout, workers),
                    Err(e) => {
                        eprintln!("error: cannot open {file}: {e}");
                        return ExitCode::from(2);
                    }
                }
            };
            match result {
                Ok(summary) => ExitCode::from(summary.exit_code as u8),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Preset {
            name,
            workers,
            format,
        } => {
            let presets = job::presets();
            let Some(name) = name else {
                for (name, desc, _) in &presets {
                    println!("{name:<12} {desc}");
                }
                return ExitCode::SUCCESS;
            };
            match presets.iter().find(|(n, _, _)| *n == name) {
                Some((_, _, req)) => {
                    run_one(req, workers.unwrap_or_else(job::default_workers), format)
                }
                None => {
                    eprintln!("error: unknown preset {name:?}; run `quotvi preset` for the list");
                    ExitCode::from(2)
                }
            }
        }
    }
}
