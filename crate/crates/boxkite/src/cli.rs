use std::path::PathBuf;

use boxkite_core::census::{census, verify_all, VerifyOptions};
use boxkite_core::golden::PRINTED_CROSS_SAILS;
use boxkite_core::mandala::{build_emanation_table_at, classify_table};
use boxkite_core::midden::{check_printed_sails, cross_harmonic_sails, harmonic_family};
use boxkite_core::triplet::nato_triplets;
use boxkite_core::{box_kite, build_table, fold, partition_sky_high, Level, Recursive};
use clap::{Parser, Subcommand, ValueEnum};

use crate::doc::{
    BoxKiteDoc, Document, FoldDoc, HarmonicEdge, HarmonicsDoc, MandalaDoc, PartitionDoc, TableDoc, TripletsDoc,
};
use crate::render;

/// Highest level the table-building commands accept.
pub const MAX_LEVEL: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, Parser)]
#[command(name = "boxkite", version, about = "Cayley-Dickson zero-divisor explorer")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis multiplication table of the 2^N-ions.
    Table {
        #[arg(long)]
        level: u32,
    },
    /// NATO triplets of the 2^N-ions.
    Triplets {
        #[arg(long)]
        level: u32,
    },
    /// Sedenion box-kite for strut constant S (1..7).
    Boxkite {
        #[arg(long)]
        strut: usize,
    },
    /// Pathion emanation table for strut constant S (1..15).
    Mandala {
        #[arg(long)]
        strut: usize,
    },
    /// Fold a sky-high emanation table onto its sedenion box-kite.
    Fold {
        #[arg(long)]
        strut: usize,
    },
    /// Split a sky-high ensemble into three box-kites.
    Partition {
        #[arg(long)]
        strut: usize,
    },
    /// Box-kite shifted by K multiples of 16.
    Harmonics {
        #[arg(long)]
        strut: usize,
        #[arg(long)]
        k: usize,
        /// Also list sails mixing harmonics 1, 2 and 3.
        #[arg(long)]
        cross: bool,
    },
    /// Zero-divisor and pairing counts at one level.
    Census {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        per_strut: bool,
    },
    /// Run every enumerable check through the given level.
    Verify {
        #[arg(long)]
        max_level: u32,
        /// Include the n = 8 censuses (slow).
        #[arg(long)]
        voudon: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputDocument {
    pub format: Format,
    pub payload: Vec<u8>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] boxkite_core::Error),
    #[error("{command} has no {format} output")]
    Unsupported { command: &'static str, format: Format },
    #[error("level {0} is above the command-line limit {MAX_LEVEL}")]
    LevelLimit(u32),
}

/// A finished command: its rendered output and whether it succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub document: OutputDocument,
    pub passed: bool,
}

fn level(n: u32) -> Result<Level, CliError> {
    if n > MAX_LEVEL {
        return Err(CliError::LevelLimit(n));
    }
    Ok(Level::new(n)?)
}

pub fn build_document(command: &Command) -> Result<Document, CliError> {
    Ok(match *command {
        Command::Table { level: n } => Document::Table(TableDoc::from(&build_table(level(n)?))),
        Command::Triplets { level: n } => {
            let triplets = nato_triplets(&build_table(level(n)?));
            Document::Triplets(TripletsDoc { level: level(n)?, count: triplets.len(), triplets })
        }
        Command::Boxkite { strut } => {
            let bk = box_kite(strut)?;
            let products = bk.strut_products(&Recursive(bk.level))?.to_vec();
            Document::Boxkite(BoxKiteDoc::new(&bk, products))
        }
        Command::Mandala { strut } => {
            let table = build_emanation_table_at(&build_table(Level::PATHIONS), strut)?;
            let classification = classify_table(&table);
            Document::Mandala(MandalaDoc { table, classification })
        }
        Command::Fold { strut } => {
            let table = build_emanation_table_at(&build_table(Level::PATHIONS), strut)?;
            Document::Fold(FoldDoc::from(&fold(&table)?))
        }
        Command::Partition { strut } => {
            let kites = partition_sky_high(strut)?.iter().map(|bk| BoxKiteDoc::new(bk, Vec::new())).collect();
            Document::Partition(PartitionDoc { strut, kites })
        }
        Command::Harmonics { strut, k, cross } => {
            let bk = box_kite(strut)?;
            let family = harmonic_family(&bk, k)?;
            let edges = family
                .edges(&Recursive(family.level))
                .into_iter()
                .map(|(from, to, edge)| HarmonicEdge { from, to, edge })
                .collect();
            let mut doc = HarmonicsDoc::new(&family, edges);
            if cross {
                let sails = cross_harmonic_sails(&build_table(Level::CHINGONS), &bk)?;
                let first = sails.iter().find(|c| (c.first.lo, c.first.hi) == (17, 26));
                if let (3, Some(first)) = (strut, first) {
                    doc.misprints = check_printed_sails(first, &PRINTED_CROSS_SAILS);
                }
                doc.cross = Some(sails);
            }
            Document::Harmonics(doc)
        }
        Command::Census { level: n, per_strut } => Document::Census(census(level(n)?, per_strut)),
        Command::Verify { max_level, voudon } => {
            Document::Verify(verify_all(VerifyOptions { max_level: level(max_level)?, voudon }))
        }
    })
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Table { .. } => "table",
            Command::Triplets { .. } => "triplets",
            Command::Boxkite { .. } => "boxkite",
            Command::Mandala { .. } => "mandala",
            Command::Fold { .. } => "fold",
            Command::Partition { .. } => "partition",
            Command::Harmonics { .. } => "harmonics",
            Command::Census { .. } => "census",
            Command::Verify { .. } => "verify",
        }
    }

    /// SVG exists only for the two grid-shaped outputs.
    pub fn supports(&self, format: Format) -> bool {
        format != Format::Svg || matches!(self, Command::Table { .. } | Command::Mandala { .. })
    }
}

pub fn render_document(doc: &Document, format: Format) -> Vec<u8> {
    match (format, doc) {
        (Format::Json, d) => {
            let mut v = serde_json::to_vec_pretty(d).expect("documents always serialize");
            v.push(b'\n');
            v
        }
        (Format::Csv, Document::Table(d)) => render::table_csv(d),
        (Format::Csv, Document::Triplets(d)) => render::triplets_csv(d),
        (Format::Csv, Document::Boxkite(d)) => render::boxkite_csv(d),
        (Format::Csv, Document::Mandala(d)) => render::mandala_csv(&d.table),
        (Format::Csv, Document::Fold(d)) => render::fold_csv(d),
        (Format::Csv, Document::Partition(d)) => render::partition_csv(d),
        (Format::Csv, Document::Harmonics(d)) => render::harmonics_csv(d),
        (Format::Csv, Document::Census(r) | Document::Verify(r)) => render::census_csv(r),
        (Format::Svg, Document::Table(d)) => render::table_svg(d).into_bytes(),
        (Format::Svg, Document::Mandala(d)) => render::mandala_svg(&d.table).into_bytes(),
        (_, d) => render_text(d).into_bytes(),
    }
}

fn render_text(doc: &Document) -> String {
    match doc {
        Document::Table(d) => render::table_text(d),
        Document::Triplets(d) => render::triplets_text(d),
        Document::Boxkite(d) => render::boxkite_text(d),
        Document::Mandala(d) => render::mandala_text(&d.table),
        Document::Fold(d) => render::fold_text(d),
        Document::Partition(d) => render::partition_text(d),
        Document::Harmonics(d) => render::harmonics_text(d),
        Document::Census(r) | Document::Verify(r) => render::census_text(r),
    }
}

/// Runs one parsed command. A failed verification is reported through
/// [`Outcome::passed`], not as an error.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if !cli.command.supports(cli.format) {
        return Err(CliError::Unsupported { command: cli.command.name(), format: cli.format });
    }
    Ok(outcome(&build_document(&cli.command)?, cli.format))
}

/// Renders `doc`; only a verification report can fail.
pub fn outcome(doc: &Document, format: Format) -> Outcome {
    let passed = match doc {
        Document::Verify(r) => r.passed(),
        _ => true,
    };
    Outcome { document: OutputDocument { format, payload: render_document(doc, format) }, passed }
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            crate::EXIT_OK
        } else {
            crate::EXIT_VERIFY_FAILED
        }
    }
}
