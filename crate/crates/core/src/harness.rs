//! Exhaustive small-graph streams, sharded scans of every checker and
//! violation reporting.

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, CatalogMin};
use crate::conjectures;
use crate::error::{Error, Result};
use crate::format::{parse_graph6, to_graph6};
use crate::graph::{Graph, VertexSet};
use crate::hypergraph::{self, HyperGraph};
use crate::invariants::Analysis;
use crate::verdict::{Status, Verdict};

/// Largest order for exhaustive graph streams.
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Largest order for exhaustive uniform hypergraph streams.
pub const MAX_HYPERGRAPH_ORDER: usize = 6;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

const CHUNK: usize = 7;

/// Canonical form of an edge mask: the smallest mask obtainable by
/// relabelling vertices, found by trying all n! permutations.
pub struct Canonicalizer {
    n: usize,
    chunks: usize,
    /// For each non-identity permutation, `chunks` tables mapping a 7-bit
    /// slice of a mask to the image bits.
    tables: Vec<[u64; 1 << CHUNK]>,
}

impl Canonicalizer {
    #[allow(clippy::needless_range_loop)]
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
            return Err(Error::EnumerationRange {
                n,
                min: 1,
                max: MAX_ENUMERATION_ORDER,
            });
        }
        let mut index = vec![vec![0usize; n]; n];
        let mut pairs = Vec::new();
        for j in 1..n {
            for i in 0..j {
                index[i][j] = pairs.len();
                index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
        let chunks = pairs.len().div_ceil(CHUNK);
        let mut tables = Vec::new();
        for perm in permutations(n).into_iter().skip(1) {
            for c in 0..chunks {
                let mut table = [0u64; 1 << CHUNK];
                for (value, slot) in table.iter_mut().enumerate() {
                    for b in 0..CHUNK {
                        let bit = c * CHUNK + b;
                        if value >> b & 1 == 1 && bit < pairs.len() {
                            let (u, v) = pairs[bit];
                            *slot |= 1u64 << index[perm[u]][perm[v]];
                        }
                    }
                }
                tables.push(table);
            }
        }
        Ok(Canonicalizer { n, chunks, tables })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn images(&self, mask: u64) -> impl Iterator<Item = u64> + '_ {
        self.tables.chunks(self.chunks.max(1)).map(move |perm| {
            perm.iter().enumerate().fold(0, |acc, (c, t)| {
                acc | t[(mask >> (c * CHUNK)) as usize & ((1 << CHUNK) - 1)]
            })
        })
    }

    pub fn canonical_mask(&self, mask: u64) -> u64 {
        self.images(mask).fold(mask, u64::min)
    }

    pub fn is_canonical(&self, mask: u64) -> bool {
        self.images(mask).all(|m| m >= mask)
    }

    pub fn canonical_form(&self, g: &Graph) -> Graph {
        assert_eq!(g.order(), self.n, "canonicalizer built for another order");
        let mask = g.edge_mask().expect("order at most 7");
        Graph::from_edge_mask(self.n, self.canonical_mask(mask))
    }
}

/// Graphs on `n` vertices in ascending edge-mask order, optionally only
/// connected ones and optionally one per isomorphism class.
pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
    step: u64,
    connected_only: bool,
    canon: Option<Canonicalizer>,
}

pub fn enumerate_graphs(n: usize, connected_only: bool, dedup: bool) -> Result<GraphStream> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange {
            n,
            min: 1,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(GraphStream {
        n,
        next: 0,
        end: 1u64 << pair_count(n),
        step: 1,
        connected_only,
        canon: dedup.then(|| Canonicalizer::new(n)).transpose()?,
    })
}

impl GraphStream {
    /// Restricts the stream to masks congruent to `shard` modulo `count`.
    pub fn shard(mut self, shard: usize, count: usize) -> Self {
        assert!(count > 0 && shard < count);
        self.next += shard as u64;
        self.step = count as u64;
        self
    }

    /// Pairs each graph with its edge mask, which is its stream index.
    pub fn indexed(self) -> impl Iterator<Item = (u64, Graph)> {
        let mut s = self;
        std::iter::from_fn(move || s.next_indexed())
    }

    fn next_indexed(&mut self) -> Option<(u64, Graph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next += self.step;
            let g = Graph::from_edge_mask(self.n, mask);
            if self.connected_only && !g.is_connected() {
                continue;
            }
            if self.canon.as_ref().is_some_and(|c| !c.is_canonical(mask)) {
                continue;
            }
            return Some((mask, g));
        }
        None
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_indexed().map(|(_, g)| g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "&'static str")]
pub enum Check {
    Theorem1,
    Theorem1Equality,
    Cor1,
    Berge,
    EdgeBound,
    GalvinGoddard,
    Decomposition,
    MatchingRemark,
    HyperCor,
    HyperConformal,
    Conj1,
    Conj1Bound,
    Conj3,
    OmegaV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// A proven statement; a violation is a defect.
    Theorem,
    /// A conjecture or side observation; a violation is a finding.
    Finding,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Theorem1,
        Check::Theorem1Equality,
        Check::Cor1,
        Check::Berge,
        Check::EdgeBound,
        Check::GalvinGoddard,
        Check::Decomposition,
        Check::MatchingRemark,
        Check::HyperCor,
        Check::HyperConformal,
        Check::Conj1,
        Check::Conj1Bound,
        Check::Conj3,
        Check::OmegaV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => bounds::THEOREM1,
            Check::Theorem1Equality => bounds::THEOREM1_EQUALITY,
            Check::Cor1 => bounds::COR1,
            Check::Berge => bounds::BERGE,
            Check::EdgeBound => bounds::EDGE_BOUND,
            Check::GalvinGoddard => bounds::GALVIN_GODDARD,
            Check::Decomposition => bounds::DECOMPOSITION,
            Check::MatchingRemark => bounds::MATCHING_REMARK,
            Check::HyperCor => hypergraph::HYPER_COR,
            Check::HyperConformal => hypergraph::HYPER_CONFORMAL,
            Check::Conj1 => conjectures::CONJ1,
            Check::Conj1Bound => conjectures::CONJ1_BOUND,
            Check::Conj3 => conjectures::CONJ3,
            Check::OmegaV => conjectures::OMEGA_V,
        }
    }

    pub fn category(self) -> Category {
        match self {
            Check::Theorem1
            | Check::Cor1
            | Check::Berge
            | Check::EdgeBound
            | Check::GalvinGoddard
            | Check::Decomposition
            | Check::HyperCor => Category::Theorem,
            _ => Category::Finding,
        }
    }

    pub fn evaluate(self, a: &Analysis) -> Verdict {
        match self {
            Check::Theorem1 => bounds::check_theorem1_on(a),
            Check::Theorem1Equality => bounds::classify_equality_theorem1_on(a),
            Check::Cor1 => bounds::check_cor1_on(a),
            Check::Berge => bounds::check_berge_on(a),
            Check::EdgeBound => bounds::check_edge_bound_on(a),
            Check::GalvinGoddard => bounds::check_galvin_goddard_on(a),
            Check::Decomposition => bounds::check_decomposition_on(a),
            Check::MatchingRemark => bounds::check_matching_remark_on(a),
            Check::HyperCor => hypergraph::check_hyper_corollary_on(a),
            Check::HyperConformal => hypergraph::check_hyper_conformal_on(a),
            Check::Conj1 => conjectures::check_conjecture1_full_on(a),
            Check::Conj1Bound => conjectures::check_conjecture1_bound_on(a),
            Check::Conj3 => conjectures::check_conjecture3_on(a),
            Check::OmegaV => conjectures::check_omega_v_substitution_on(a),
        }
    }

    /// Parses a comma-separated list; `all` expands to every check.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        let mut checks = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                checks.extend(Check::ALL);
            } else {
                checks.push(name.parse()?);
            }
        }
        let mut seen = Vec::new();
        checks.retain(|c| {
            let fresh = !seen.contains(c);
            seen.push(*c);
            fresh
        });
        Ok(checks)
    }
}

impl From<Check> for &'static str {
    fn from(c: Check) -> Self {
        c.name()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    /// Accepts `_` in place of `-`.
    fn from_str(s: &str) -> Result<Self> {
        let name = s.replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    Enumerate {
        n: usize,
        connected_only: bool,
        dedup: bool,
    },
    File {
        path: PathBuf,
    },
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub source: Source,
    pub checks: Vec<String>,
    pub shard_count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTotals {
    pub check: &'static str,
    pub applicable: u64,
    pub holds: u64,
    pub equality: u64,
    pub violated: u64,
    pub not_applicable: u64,
    pub unchecked: u64,
}

impl CheckTotals {
    fn new(check: &'static str) -> Self {
        CheckTotals {
            check,
            ..Default::default()
        }
    }

    pub fn record(&mut self, v: &Verdict) {
        match v.status {
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Unchecked => self.unchecked += 1,
        }
        if v.applicable() {
            self.applicable += 1;
            self.equality += u64::from(v.equality);
        }
    }

    fn add(&mut self, o: &CheckTotals) {
        self.applicable += o.applicable;
        self.holds += o.holds;
        self.equality += o.equality;
        self.violated += o.violated;
        self.not_applicable += o.not_applicable;
        self.unchecked += o.unchecked;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Edge mask for enumerated streams, line position for files.
    pub index: u64,
    pub graph6: String,
    pub check: &'static str,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub source: Source,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuntimeStats {
    pub elapsed_ms: u64,
    pub shards: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub version: &'static str,
    pub config: ConfigEcho,
    pub graphs: u64,
    pub totals: Vec<CheckTotals>,
    pub violations: Vec<Violation>,
    pub runtime: RuntimeStats,
}

#[derive(Serialize)]
struct ReportBody<'a> {
    version: &'static str,
    config: &'a ConfigEcho,
    graphs: u64,
    totals: &'a [CheckTotals],
    violations: &'a [Violation],
}

impl ScanReport {
    pub fn totals_for(&self, check: Check) -> Option<&CheckTotals> {
        self.totals.iter().find(|t| t.check == check.name())
    }

    /// Everything but the runtime statistics, which is identical for any
    /// shard count.
    pub fn body_json(&self) -> String {
        serde_json::to_string(&ReportBody {
            version: self.version,
            config: &self.config,
            graphs: self.graphs,
            totals: &self.totals,
            violations: &self.violations,
        })
        .expect("report serializes")
    }

    /// True when some check of the theorem category is violated.
    pub fn theorem_violated(&self) -> bool {
        self.violations.iter().any(|v| {
            v.check
                .parse::<Check>()
                .is_ok_and(|c| c.category() == Category::Theorem)
        })
    }
}

pub fn write_violations_tsv<W: Write>(report: &ScanReport, mut out: W) -> io::Result<()> {
    writeln!(out, "check\tindex\tgraph6\tlhs\trhs\tslack\tnote")?;
    for v in &report.violations {
        let note = v
            .verdict
            .note
            .as_deref()
            .unwrap_or("")
            .replace(['\t', '\n'], " ");
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            v.check, v.index, v.graph6, v.verdict.lhs, v.verdict.rhs, v.verdict.slack, note
        )?;
    }
    Ok(())
}

/// Reads one graph6 graph per significant line, with its line number.
pub fn read_graph6_file(path: &Path) -> Result<Vec<(u64, Graph)>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .map(|(i, l)| {
            parse_graph6(l)
                .map(|g| (i as u64 + 1, g))
                .map_err(|e| Error::InFile {
                    path: path.to_path_buf(),
                    line: i + 1,
                    source: Box::new(e),
                })
        })
        .collect()
}

enum Loaded {
    Enumerated {
        n: usize,
        connected_only: bool,
        dedup: bool,
    },
    Listed(Vec<(u64, Graph)>),
}

impl Loaded {
    fn open(source: &Source) -> Result<Self> {
        Ok(match *source {
            Source::Enumerate {
                n,
                connected_only,
                dedup,
            } => {
                enumerate_graphs(n, connected_only, false)?;
                Loaded::Enumerated {
                    n,
                    connected_only,
                    dedup,
                }
            }
            Source::File { ref path } => Loaded::Listed(read_graph6_file(path)?),
        })
    }

    fn shard(&self, k: usize, count: usize) -> Box<dyn Iterator<Item = (u64, Graph)> + '_> {
        match *self {
            Loaded::Enumerated {
                n,
                connected_only,
                dedup,
            } => Box::new(
                enumerate_graphs(n, connected_only, dedup)
                    .expect("validated on open")
                    .shard(k, count)
                    .indexed(),
            ),
            Loaded::Listed(ref graphs) => Box::new(graphs.iter().skip(k).step_by(count).cloned()),
        }
    }
}

struct ShardResult {
    graphs: u64,
    totals: Vec<CheckTotals>,
    violations: Vec<Violation>,
}

pub fn scan(config: &ScanConfig) -> Result<ScanReport> {
    let start = Instant::now();
    let checks = config
        .checks
        .iter()
        .map(|s| s.parse::<Check>())
        .collect::<Result<Vec<_>>>()?;
    if config.shard_count == 0 {
        return Err(Error::ZeroShards);
    }
    let loaded = Loaded::open(&config.source)?;

    let shards: Vec<ShardResult> = (0..config.shard_count)
        .into_par_iter()
        .map(|k| {
            let mut out = ShardResult {
                graphs: 0,
                totals: checks.iter().map(|c| CheckTotals::new(c.name())).collect(),
                violations: Vec::new(),
            };
            for (index, g) in loaded.shard(k, config.shard_count) {
                out.graphs += 1;
                let a = Analysis::new(&g);
                for (c, totals) in checks.iter().zip(out.totals.iter_mut()) {
                    let verdict = c.evaluate(&a);
                    totals.record(&verdict);
                    if verdict.violated() {
                        out.violations.push(Violation {
                            index,
                            graph6: to_graph6(&g),
                            check: c.name(),
                            verdict,
                        });
                    }
                }
            }
            out
        })
        .collect();

    let mut graphs = 0;
    let mut totals: Vec<CheckTotals> = checks.iter().map(|c| CheckTotals::new(c.name())).collect();
    let mut violations = Vec::new();
    for s in shards {
        graphs += s.graphs;
        for (t, u) in totals.iter_mut().zip(&s.totals) {
            t.add(u);
        }
        violations.extend(s.violations);
    }
    let position = |name: &str| checks.iter().position(|c| c.name() == name);
    violations.sort_by_key(|v: &Violation| (position(v.check), v.index));

    Ok(ScanReport {
        version: crate::VERSION,
        config: ConfigEcho {
            source: config.source.clone(),
            checks,
        },
        graphs,
        totals,
        violations,
        runtime: RuntimeStats {
            elapsed_ms: start.elapsed().as_millis() as u64,
            shards: config.shard_count,
        },
    })
}

/// [`bounds::catalog_min_edges`] over a source, folded per shard and
/// merged; the result does not depend on `shard_count`.
pub fn catalog_scan(
    alpha: usize,
    tau: usize,
    components: usize,
    source: &Source,
    shard_count: usize,
) -> Result<CatalogMin> {
    if shard_count == 0 {
        return Err(Error::ZeroShards);
    }
    let loaded = Loaded::open(source)?;
    let merged = (0..shard_count)
        .into_par_iter()
        .map(|k| {
            let mut acc = CatalogMin::new(alpha, tau, components);
            for (index, g) in loaded.shard(k, shard_count) {
                acc.observe(index as usize, &g);
            }
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(CatalogMin::merge)
        .expect("at least one shard");
    Ok(merged)
}

/// All r-uniform hypergraphs on `n` vertices (including the edgeless one).
/// Bit i of the stream index selects the i-th r-subset in ascending bit
/// order.
pub fn uniform_hypergraphs(n: usize, r: usize) -> Result<impl Iterator<Item = (u64, HyperGraph)>> {
    if !(1..=MAX_HYPERGRAPH_ORDER).contains(&n) {
        return Err(Error::EnumerationRange {
            n,
            min: 1,
            max: MAX_HYPERGRAPH_ORDER,
        });
    }
    let subsets: Vec<VertexSet> = (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(VertexSet::from_bits)
        .collect();
    Ok((0u64..1 << subsets.len()).map(move |index| {
        let edges = (0..subsets.len())
            .filter(|i| index >> i & 1 == 1)
            .map(|i| subsets[i])
            .collect();
        (
            index,
            HyperGraph::new(n, edges).expect("edges within range"),
        )
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperViolation {
    pub index: u64,
    pub edges: Vec<VertexSet>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperScanReport {
    pub n: usize,
    pub rank: usize,
    pub hypergraphs: u64,
    pub totals: CheckTotals,
    pub violations: Vec<HyperViolation>,
}

/// Runs the uniform-hypergraph conjecture over every r-uniform hypergraph
/// on `n` vertices.
pub fn scan_uniform_hypergraphs(n: usize, r: usize, shard_count: usize) -> Result<HyperScanReport> {
    if shard_count == 0 {
        return Err(Error::ZeroShards);
    }
    let _validated = uniform_hypergraphs(n, r)?;
    let parts: Vec<(u64, CheckTotals, Vec<HyperViolation>)> = (0..shard_count)
        .into_par_iter()
        .map(|k| {
            let mut totals = CheckTotals::new(hypergraph::CONJ2);
            let mut violations = Vec::new();
            let mut count = 0;
            for (index, h) in uniform_hypergraphs(n, r)
                .expect("validated")
                .skip(k)
                .step_by(shard_count)
            {
                count += 1;
                let verdict = hypergraph::check_conjecture2(&h);
                totals.record(&verdict);
                if verdict.violated() {
                    violations.push(HyperViolation {
                        index,
                        edges: h.edges().to_vec(),
                        verdict,
                    });
                }
            }
            (count, totals, violations)
        })
        .collect();
    let mut report = HyperScanReport {
        n,
        rank: r,
        hypergraphs: 0,
        totals: CheckTotals::new(hypergraph::CONJ2),
        violations: Vec::new(),
    };
    for (count, totals, violations) in parts {
        report.hypergraphs += count;
        report.totals.add(&totals);
        report.violations.extend(violations);
    }
    report.violations.sort_by_key(|v| v.index);
    Ok(report)
}
