//! Command-line front end for the exact reconstruction toolkit: element and
//! group parsing, one subcommand per verification task, deterministic JSON
//! reports.

mod commands;
mod registry;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use report::{Check, Report, EXIT_ERROR, EXIT_FALSE, EXIT_TRUE};

/// Exact verification commands for group actions on the binary Cantor set
/// and on finite point sets.
///
/// Elements are written either inline (`{0->1,1->0}`, `id`) or as names:
/// the built-ins `flip`, `id`, the Thompson V generators `a`, `b`, `c`,
/// `pi0`, the spine swaps `s0`..`s7`, and any map defined in files passed
/// via --file. Clopen sets are written `{00,1}` (`{}` empty, `{e}` whole
/// space); points are written `u(v)` for the eventually periodic word
/// u·v^∞, e.g. `01(10)`.
#[derive(Parser, Debug)]
#[command(name = "rubin", version, max_term_width = 100)]
pub struct Cli {
    /// Element-definition files (blocks of `map <name>` followed by
    /// `source -> target` lines); may be repeated.
    #[arg(long = "file", global = true, value_name = "PATH")]
    pub files: Vec<PathBuf>,

    /// Write the JSON report to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide by exhaustive search whether g is algebraically disjoint from
    /// f in the symmetric group (degree at most 7). Exit 0 iff the verdict
    /// is true.
    PermAlgdisj {
        /// Symmetric group, e.g. S4.
        #[arg(long)]
        group: String,
        /// Permutation in cycle notation, e.g. "(1 2)(3 4)".
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },

    /// List the centralizer of a permutation in its symmetric group.
    PermCentralizer {
        #[arg(long)]
        group: String,
        #[arg(long)]
        g: String,
    },

    /// Print the regular support and exceptional fixed points of an element.
    HomeoRsupp {
        /// Element name or inline table.
        #[arg(long)]
        el: String,
    },

    /// Find the order of an element up to a bound. Exit 1 if it exceeds it.
    HomeoOrder {
        #[arg(long)]
        el: String,
        /// Largest order to test for.
        #[arg(long, default_value_t = 256)]
        order_bound: u32,
        /// Abort if an intermediate table exceeds this many cells.
        #[arg(long, default_value_t = 4096)]
        table_budget: usize,
    },

    /// Construct and verify the disjoint-supports witness pair (f1, f2) for
    /// a triple with supp(f) ∩ supp(g) = ∅ and [f,h] ≠ 1.
    WitnessF1f2 {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },

    /// Construct the refutation candidate (h, V) for a pair with
    /// rsupp(f) ∩ supp(g^12) ≠ ∅. The output is evidence: the impossibility
    /// of witness pairs for this h quantifies over the whole group.
    Refuter {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 4096)]
        table_budget: usize,
    },

    /// Draw seeded samples from S_f: twelfth powers of elements supported
    /// away from rsupp(f).
    SfSample {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Sampling seed; required so reports are reproducible.
        #[arg(long)]
        seed: u64,
    },

    /// Test membership of h in G_rsupp(f) against seeded S_f samples and
    /// cross-validate with the exact inclusion. Exit 0 iff h lies in the
    /// group.
    GuTest {
        #[arg(long)]
        h: String,
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },

    /// Build an element of G_U of order exactly n+1.
    OrderWitness {
        /// Clopen set, e.g. "{110}".
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u32,
    },

    /// Decide U ⊆ V; when it fails, produce a separator element lying in
    /// G_U but not G_V. Exit 0 iff the inclusion holds.
    GuInclusion {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },

    /// Describe the truncated poset of regular supports at a depth:
    /// element count, and for enumerable depths a verification that every
    /// element is realized as a regular support.
    Poset {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },

    /// Bounded orbit-coverage search: does the orbit of the point's
    /// ultrafilter under G_U contain the whole truncated poset below some
    /// cylinder V ⊆ U? Exit 0 iff covered; agreement with exact convergence
    /// is reported as a check.
    Coverage {
        /// Point, e.g. "(0)" or "01(10)".
        #[arg(long)]
        point: String,
        /// Clopen set U.
        #[arg(long)]
        set: String,
        /// Generator family: v-standard, spine-swaps, or a file path.
        #[arg(long, default_value = "v-standard")]
        gens: String,
        #[arg(long, default_value_t = 8)]
        radius: u32,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Cap on distinct word-ball elements.
        #[arg(long, default_value_t = 100_000)]
        ball_budget: usize,
    },

    /// Reconstruct the space at a truncation depth: profile classes, the
    /// class of each depth-d cylinder, and the generator action as class
    /// permutations. Generators must preserve cylinder lengths at the
    /// chosen depth (the spine-swaps family always does).
    Reconstruct {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value = "spine-swaps")]
        gens: String,
        /// Accepted for interface parity with coverage; echoed in bounds.
        #[arg(long, default_value_t = 8)]
        radius: u32,
    },

    /// Verify the order-two commuting-conjugates construction for the
    /// first-digit flip against a given h, as exact table identities.
    AppendixVerify {
        #[arg(long)]
        h: String,
    },
}

/// Runs a parsed invocation and returns the report plus exit code. The
/// report is always produced, including for input errors.
pub fn run(cli: &Cli) -> (Report, i32) {
    match commands::dispatch(cli) {
        Ok(pair) => pair,
        Err((command, err)) => {
            let mut report = Report::new(command);
            report.check("error", false, err.to_string());
            (report, EXIT_ERROR)
        }
    }
}
