use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sedenion_calibrations::{build, NamedForm};
use sedenion_cd::octonion_like_classify;
use sedenion_cli::{run_suite, CliError, Fixtures, Options, Suite, REPORT_VERSION};
use sedenion_core::{parse_form, Multivector};
use sedenion_fano::{fano_volume, plane_dot, plane_svg, volume_dot, volume_json, volume_svg, FanoPlane};

#[derive(Parser)]
#[command(name = "sedenion", version, about = "Calibration and sedenion verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        suite: Suite,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Accept printed invariant rows that fix Phi up to term signs.
        #[arg(long)]
        parity_relaxed: bool,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory with fixture files replacing the embedded copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Identify the octonion-like algebra of a 7-term 3-form.
    Classify { file: PathBuf },
    /// Draw a Fano plane or the Fano volume.
    Render {
        target: Target,
        /// Named form or file holding a 7-term 3-form (plane only).
        input: Option<String>,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Plane,
    Volume,
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |e| CliError::Io(format!("{}: {e}", path.display()))
}

fn verify(
    suite: Suite,
    out: Option<PathBuf>,
    format: Format,
    jobs: Option<usize>,
    opts: Options,
) -> Result<bool, CliError> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }
    let report = run_suite(suite, &opts)?;
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match out {
        Some(p) => fs::write(&p, text).map_err(io_err(&p))?,
        None => println!("{text}"),
    }
    Ok(report.pass())
}

fn read_form(path: &Path) -> Result<Multivector, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    if text.trim().is_empty() {
        return Err(CliError::Usage(format!("{}: empty form file", path.display())));
    }
    parse_form(text.trim(), 7).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn classify(file: &Path) -> Result<(), CliError> {
    let form = read_form(file)?;
    let c = octonion_like_classify(&form).map_err(|e| CliError::Malformed(e.to_string()))?;
    let [a, b, cc, x] = c.counts;
    let out = json!({
        "report_version": REPORT_VERSION,
        "class": c.tag.to_string(),
        "counts": { "A": a, "B": b, "C": cc, "X": x },
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json value"));
    Ok(())
}

fn plane_input(input: Option<&str>) -> Result<Multivector, CliError> {
    let input = input.ok_or_else(|| CliError::Usage("render plane needs a named form or a form file".into()))?;
    if let Ok(name) = input.parse::<NamedForm>() {
        if name.dim() == 7 {
            return build(name).map_err(|e| CliError::Malformed(e.to_string()));
        }
    }
    let path = Path::new(input);
    if path.exists() {
        read_form(path)
    } else {
        Err(CliError::Usage(format!("`{input}` is neither a 7-dimensional named form nor a file")))
    }
}

fn render(target: Target, input: Option<String>, mut want: [bool; 3], out: &Path) -> Result<(), CliError> {
    if want == [false; 3] {
        want[0] = true;
    }
    let mut files: Vec<(&str, String)> = Vec::new();
    match target {
        Target::Plane => {
            let plane = FanoPlane::from_form(&plane_input(input.as_deref())?).map_err(|e| CliError::Malformed(e.to_string()))?;
            if want[0] {
                files.push(("plane.svg", plane_svg(&plane).map_err(|e| CliError::Malformed(e.to_string()))?));
            }
            if want[1] {
                files.push(("plane.dot", plane_dot(&plane)));
            }
            if want[2] {
                let mut text = serde_json::to_string_pretty(&plane).expect("serialisable");
                text.push('\n');
                files.push(("plane.json", text));
            }
        }
        Target::Volume => {
            if input.is_some() {
                return Err(CliError::Usage("render volume takes no input".into()));
            }
            let vol = fano_volume().map_err(|e| CliError::Malformed(e.to_string()))?;
            if want[0] {
                files.push(("volume.svg", volume_svg(&vol)));
            }
            if want[1] {
                files.push(("volume.dot", volume_dot(&vol)));
            }
            if want[2] {
                files.push(("volume.json", volume_json(&vol)));
            }
        }
    }
    fs::create_dir_all(out).map_err(io_err(out))?;
    for (name, text) in files {
        let p = out.join(name);
        fs::write(&p, text).map_err(io_err(&p))?;
        println!("{}", p.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { suite, out, format, jobs, parity_relaxed, seed, fixtures } => {
            let fixtures = match fixtures {
                Some(dir) => Fixtures::from_dir(&dir)?,
                None => Fixtures::default(),
            };
            verify(suite, out, format, jobs, Options { parity_relaxed, seed, fixtures })
        }
        Command::Classify { file } => classify(&file).map(|_| true),
        Command::Render { target, input, svg, dot, json, out } => render(target, input, [svg, dot, json], &out).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sedenion: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
