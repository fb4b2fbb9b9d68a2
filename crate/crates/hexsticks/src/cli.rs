//! Command line. Exit codes: 0 success, 1 usage, 2 I/O, 3 parse.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hexsticks_core::criteria::{auto_evaluate_proposed, score, Criterion, PROPOSED_SET};
use hexsticks_core::dump::{DumpConfig, DumpMode, OffsetStyle};
use hexsticks_core::svg::glyph_sheet;
use hexsticks_core::StyleProfile;

use crate::convert::{convert, name_of, Repr};
use crate::dump::dump_stream;
use crate::fixture::builtin_table;
use crate::style::load_style;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hexsticks", version, about = "Binary-encoding hex digits: dumps, names, glyphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Art,
    Names,
    Std,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OffsetArg {
    Std,
    Glyph,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dump a file byte by byte.
    Dump {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "names")]
        mode: ModeArg,
        /// Glyph size in art mode.
        #[arg(long, default_value_t = 2)]
        scale: usize,
        /// Bytes per line.
        #[arg(long, default_value_t = 16)]
        cols: usize,
        #[arg(long, value_enum, default_value = "std")]
        offsets: OffsetArg,
        /// Leave out the ASCII gutter.
        #[arg(long)]
        no_ascii: bool,
    },
    /// Re-render a value in another representation.
    Convert {
        value: String,
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
    },
    /// Byte names of a value given in hex (0x...) or decimal.
    Name { value: String },
    /// Write the SVG sheet of all digits and ligatures.
    Sheet {
        #[arg(long)]
        out: PathBuf,
        /// JSON file with style fields.
        #[arg(long)]
        style: Option<PathBuf>,
    },
    /// Print the symbol-set comparison table.
    Score,
    /// Run the hex editor service on localhost.
    Serve {
        /// 0 picks a free port.
        #[arg(long, default_value_t = 0)]
        port: u16,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => EXIT_IO,
        Error::Json { .. } | Error::Fixture(_) => EXIT_PARSE,
        Error::Model(m) => match m {
            hexsticks_core::Error::Parse { .. } | hexsticks_core::Error::InvalidGlyph(_) => EXIT_PARSE,
            _ => EXIT_USAGE,
        },
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::io("<stdout>", e))
}

fn score_table() -> String {
    let mut s = format!("{:<28}", "Symbol set");
    for c in Criterion::ALL {
        s.push_str(&format!(" {:>4}", c.key()));
    }
    s.push_str(" Score\n");
    for row in builtin_table() {
        s.push_str(&format!("{:<28}", row.profile.name));
        for (_, flag) in row.profile.flags() {
            s.push_str(&format!(" {:>4}", if flag { "✓" } else { "" }));
        }
        s.push_str(&format!(" {:>5}\n", score(&row.profile)));
    }
    s
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Error> {
    match cmd {
        Command::Dump {
            file,
            mode,
            scale,
            cols,
            offsets,
            no_ascii,
        } => {
            let cfg = DumpConfig {
                bytes_per_line: cols,
                mode: match mode {
                    ModeArg::Art => DumpMode::Art,
                    ModeArg::Names => DumpMode::Names,
                    ModeArg::Std => DumpMode::Std,
                },
                scale,
                offsets: match offsets {
                    OffsetArg::Std => OffsetStyle::Std,
                    OffsetArg::Glyph => OffsetStyle::Glyph,
                },
                ascii_gutter: !no_ascii,
            };
            cfg.validate()?;
            let input = File::open(&file).map_err(|e| Error::io(&file, e))?;
            let mut w = BufWriter::new(out);
            dump_stream(BufReader::new(input), &mut w, &cfg)
        }
        Command::Convert { value, from, to } => {
            write_out(out, &convert(&value, from, to)?)?;
            write_out(out, "\n")
        }
        Command::Name { value } => {
            write_out(out, &name_of(&value)?)?;
            write_out(out, "\n")
        }
        Command::Sheet { out: path, style } => {
            let style = match style {
                Some(p) => load_style(&p)?,
                None => StyleProfile::default(),
            };
            let doc = glyph_sheet(&style);
            std::fs::write(&path, doc.as_str()).map_err(|e| Error::io(&path, e))
        }
        Command::Score => {
            write_out(out, &score_table())?;
            let proposed = auto_evaluate_proposed()?;
            let computed: Vec<String> = [Criterion::Str, Criterion::Dsp, Criterion::Bin, Criterion::Lig]
                .into_iter()
                .map(|c| format!("{c}={}", proposed.flag(c)))
                .collect();
            write_out(
                out,
                &format!("\ncomputed for {PROPOSED_SET}: {}\n", computed.join(" ")),
            )
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new().map_err(|e| Error::io("<runtime>", e))?;
            rt.block_on(crate::service::serve(port, |addr| {
                println!("listening on http://{addr}");
            }))
            .map_err(|e| Error::io(format!("127.0.0.1:{port}"), e))
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "hexsticks: {e}");
            exit_code(&e)
        }
    }
}
