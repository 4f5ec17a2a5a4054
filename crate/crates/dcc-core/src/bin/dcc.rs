//! Command-line front end: generate graphs, construct covers, convert between
//! cover formats, report stats, run applications on any representation, and
//! benchmark the cover arm against the adjacency arm.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use dcc_core::algo::{self, INFINITY};
use dcc_core::bench::{load_representation, run_bench, App, Representation};
use dcc_core::construct;
use dcc_core::cover::{
    cover_stats, save_cover_path, validate_cover, CliqueCover, DccRepresentation,
};
use dcc_core::degeneracy::degeneracy_ordering;
use dcc_core::encoding::encode_cover;
use dcc_core::error::{Error, Result};
use dcc_core::generate;
use dcc_core::graph::{graph_stats, load_graph_path, save_graph_path, Graph};

#[derive(Parser)]
#[command(
    name = "dcc",
    version,
    about = "Dual clique cover graph toolkit",
    after_help = "Vertex ids in files and on the command line are 1-based.\n\
                  The DCC_SEED environment variable overrides the default seed (1);\n\
                  an explicit --seed flag overrides both."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph file from a synthetic family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Build a clique cover of a graph with one of the five constructors.
    Construct {
        /// Input graph file.
        #[arg(short, long)]
        graph: PathBuf,
        /// Construction algorithm.
        #[arg(short, long, value_enum)]
        algo: Algo,
        /// Greedily drop redundant vertex-clique assignments afterwards.
        #[arg(long)]
        assignment_minimal: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = CoverFormat::Text)]
        format: CoverFormat,
        /// Output cover file.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Convert a cover file between the text and encoded formats.
    Convert {
        /// Input cover file (either format).
        #[arg(short, long)]
        input: PathBuf,
        /// Target format.
        #[arg(long, value_enum)]
        to: CoverFormat,
        /// Output file.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Validate a cover against its graph and print cover statistics as JSON.
    Stats {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cover: PathBuf,
    },
    /// Run one application on a representation file (graph, text cover, or
    /// encoded cover) and write its result file.
    Run {
        /// One of: cc, bfs, bfs-forest, dfs, matching, mis, color, kcore,
        /// ecc, maxclique.
        app: String,
        /// Representation file.
        #[arg(short, long)]
        input: PathBuf,
        /// Source vertex for bfs (1-based).
        #[arg(long)]
        source: Option<u64>,
        /// Output result file.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run applications on both arms and emit a timing/memory report.
    Bench {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cover: PathBuf,
        /// Comma-separated app list; defaults to all.
        #[arg(long)]
        apps: Option<String>,
        /// Repetitions to average over.
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Label recorded in the report's constructor field.
        #[arg(long, default_value = "-")]
        constructor: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Report file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Erdős–Rényi G(n, p).
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Preferential attachment from a k-clique seed.
    Ba {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Uniform attachment from a k-clique seed.
    Ua {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Two n-cliques joined by a perfect matching.
    MatchedCliques {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Complete graph on 2k vertices minus a perfect matching (k a power of
    /// two).
    CliqueMinusMatching {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Three n-cliques A, B, U with U complete to A and B.
    Abu {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Five n-cliques separating clique-count from assignment-count optima.
    Separation {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    /// Peeling via complement coloring, no succinctness guarantee.
    Lp,
    /// Succinct peeling (composition-minimal, clique count bounded by the
    /// non-edge count).
    Sp,
    /// Global admissibility (composition-minimal).
    Ga,
    /// Local admissibility (composition-minimal, linear working space).
    La,
    /// Local peeling (no augmentation, no succinctness guarantee).
    Pl,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Lp => "lp",
            Algo::Sp => "sp",
            Algo::Ga => "ga",
            Algo::La => "la",
            Algo::Pl => "pl",
        }
    }

    fn construct(self, g: &Graph) -> DccRepresentation {
        match self {
            Algo::Lp => construct::lovasz_peeling(g),
            Algo::Sp => construct::succinct_peeling(g),
            Algo::Ga => construct::global_admissibility(g),
            Algo::La => construct::local_admissibility(g),
            Algo::Pl => construct::local_peeling(g),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverFormat {
    Text,
    Encoded,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

fn default_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("DCC_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParam(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Gen { family } => cmd_gen(family),
        Cmd::Construct {
            graph,
            algo,
            assignment_minimal,
            format,
            out,
        } => cmd_construct(&graph, algo, assignment_minimal, format, &out),
        Cmd::Convert { input, to, out } => cmd_convert(&input, to, &out),
        Cmd::Stats { graph, cover } => cmd_stats(&graph, &cover),
        Cmd::Run {
            app,
            input,
            source,
            out,
        } => cmd_run(&app, &input, source, &out),
        Cmd::Bench {
            graph,
            cover,
            apps,
            reps,
            constructor,
            format,
            out,
        } => cmd_bench(&graph, &cover, apps.as_deref(), reps, &constructor, format, out.as_deref()),
    }
}

fn cmd_gen(family: Family) -> Result<()> {
    let (g, out) = match family {
        Family::Er { n, p, seed, out } => (generate::gen_er(n, p, default_seed(seed))?, out),
        Family::Ba { n, k, seed, out } => (generate::gen_ba(n, k, default_seed(seed))?, out),
        Family::Ua { n, k, seed, out } => (generate::gen_ua(n, k, default_seed(seed))?, out),
        Family::MatchedCliques { n, out } => {
            if n < 1 {
                return Err(Error::InvalidParam("n must be at least 1".into()));
            }
            (generate::gen_matched_cliques(n), out)
        }
        Family::CliqueMinusMatching { k, out } => {
            (generate::gen_clique_minus_matching(k)?, out)
        }
        Family::Abu { n, out } => {
            if n < 2 {
                return Err(Error::InvalidParam("n must be at least 2".into()));
            }
            (generate::gen_abu_family(n), out)
        }
        Family::Separation { n, out } => {
            if n < 1 {
                return Err(Error::InvalidParam("n must be at least 1".into()));
            }
            (generate::gen_separation_family(n), out)
        }
    };
    save_graph_path(&g, &out)?;
    println!("n={} m={} out={}", g.n(), g.m(), out.display());
    Ok(())
}

fn cmd_construct(
    graph: &Path,
    algo: Algo,
    assignment_minimal: bool,
    format: CoverFormat,
    out: &Path,
) -> Result<()> {
    let g = load_graph_path(graph)?;
    let mut cover = algo.construct(&g).cover;
    if assignment_minimal {
        cover = dcc_core::minimality::make_assignment_minimal(&g, &cover)?;
    }
    match format {
        CoverFormat::Text => save_cover_path(&cover, out)?,
        CoverFormat::Encoded => encode_cover(&cover).write_to_path(out)?,
    }
    let ord = degeneracy_ordering(&g);
    let st = cover_stats(&g, &cover, &ord.coreness);
    println!(
        "algo={} n={} m={} cliques={} size={} compression_ratio={:.4} ub_opt={:.4} \
         assignment_minimal={} out={}",
        algo.name(),
        g.n(),
        g.m(),
        st.num_cliques,
        st.assignments,
        st.compression_ratio,
        st.ub_opt,
        assignment_minimal,
        out.display()
    );
    Ok(())
}

fn cmd_convert(input: &Path, to: CoverFormat, out: &Path) -> Result<()> {
    let cover = match load_representation(input)? {
        Representation::Cover(c) => c,
        Representation::Encoded(e) => e.decode_cover()?,
        Representation::Graph(_) => {
            return Err(Error::Mismatch(format!(
                "{} is a graph file, expected a cover",
                input.display()
            )))
        }
    };
    match to {
        CoverFormat::Text => save_cover_path(&cover, out)?,
        CoverFormat::Encoded => encode_cover(&cover).write_to_path(out)?,
    }
    println!(
        "n={} cliques={} size={} out={}",
        cover.n(),
        cover.num_cliques(),
        cover.size(),
        out.display()
    );
    Ok(())
}

fn cmd_stats(graph: &Path, cover: &Path) -> Result<()> {
    let g = load_graph_path(graph)?;
    let c = match load_representation(cover)? {
        Representation::Cover(c) => c,
        Representation::Encoded(e) => e.decode_cover()?,
        Representation::Graph(_) => {
            return Err(Error::Mismatch(format!(
                "{} is a graph file, expected a cover",
                cover.display()
            )))
        }
    };
    let report = validate_cover(&g, &c)?;
    if !report.is_valid() {
        return Err(Error::InvalidCover(report.summary()));
    }
    let ord = degeneracy_ordering(&g);
    let cs = cover_stats(&g, &c, &ord.coreness);
    let gs = graph_stats(&g);
    // On-disk byte ratio alongside the assignment-count ratio; the two track
    // each other closely under the text formats but are not identical.
    let graph_bytes = std::fs::metadata(graph)?.len();
    let cover_bytes = std::fs::metadata(cover)?.len();
    let json = serde_json::json!({
        "graph": gs,
        "cover": cs,
        "files": {
            "graph_bytes": graph_bytes,
            "cover_bytes": cover_bytes,
            "byte_ratio": graph_bytes as f64 / cover_bytes as f64,
        },
    });
    println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
    Ok(())
}

/// Uncovered vertices get reported in a comment line of the result file.
fn uncovered_comment(n: usize, universe: &[u32]) -> String {
    if universe.len() == n {
        return String::new();
    }
    let mut present = vec![false; n];
    for &v in universe {
        present[v as usize] = true;
    }
    let missing: Vec<String> = (0..n as u32)
        .filter(|&v| !present[v as usize])
        .map(|v| (v + 1).to_string())
        .collect();
    format!("% uncovered vertices: {}\n", missing.join(" "))
}

fn cmd_run(app: &str, input: &Path, source: Option<u64>, out: &Path) -> Result<()> {
    let app = App::parse(app)?;
    let t_read = Instant::now();
    let repr = load_representation(input)?;
    let read_s = t_read.elapsed().as_secs_f64();

    let t_compute = Instant::now();
    let mut dual_s = 0.0;
    let body = match &repr {
        Representation::Graph(g) => run_on_graph(app, g, source)?,
        Representation::Cover(c) => {
            let (body, d) = run_on_cover(app, c, source)?;
            dual_s = d;
            body
        }
        Representation::Encoded(enc) => match app {
            // Streaming: per-clique decode, no full materialization.
            App::Cc => render_components(&algo::connected_components_encoded(enc)?, enc.n()),
            App::Matching => render_matching(&algo::maximal_matching_encoded(enc)?),
            _ => {
                let t = Instant::now();
                let c = enc.decode_cover()?;
                let (body, d) = run_on_cover(app, &c, source)?;
                dual_s = d + t.elapsed().as_secs_f64();
                body
            }
        },
    };
    let compute_s = t_compute.elapsed().as_secs_f64();
    std::fs::write(out, body)?;
    println!(
        "app={} read_time_s={:.6} dual_build_time_s={:.6} compute_time_s={:.6} total_time_s={:.6} out={}",
        app.name(),
        read_s,
        dual_s,
        compute_s,
        read_s + compute_s,
        out.display()
    );
    Ok(())
}

fn resolve_source(source: Option<u64>, n: usize, fallback: Option<u32>) -> Result<u32> {
    match source {
        Some(s) => {
            if s < 1 || s > n as u64 {
                return Err(Error::InvalidParam(format!(
                    "--source {s} out of range 1..={n}"
                )));
            }
            Ok((s - 1) as u32)
        }
        None => fallback.ok_or_else(|| Error::InvalidParam("--source required".into())),
    }
}

fn run_on_cover(app: App, cover: &CliqueCover, source: Option<u64>) -> Result<(String, f64)> {
    let universe = cover.universe();
    if app.needs_dual() {
        let t = Instant::now();
        let dcc = DccRepresentation::from_cover(cover.clone());
        let dual_s = t.elapsed().as_secs_f64();
        let body = match app {
            App::Bfs => {
                let s = resolve_source(source, cover.n(), universe.first().copied())?;
                render_bfs(&algo::bfs(&dcc, s)?, s)
            }
            App::BfsForest => {
                let f = algo::bfs_forest(&dcc);
                render_parents("bfs-forest", &f.parent, &universe, cover.n())
            }
            App::Dfs => {
                let parent = algo::dfs_forest(&dcc);
                render_parents("dfs", &parent, &universe, cover.n())
            }
            App::Mis => render_vertex_set("mis", &algo::maximal_independent_set(&dcc)),
            App::Color => render_colors(&algo::first_fit_coloring(&dcc, &universe), &universe),
            App::Kcore => {
                let r = algo::k_core_decomposition(&dcc);
                render_kcore(&r, &universe)
            }
            App::Ecc => {
                let e = algo::eccentricity_sweep(&dcc)?;
                format!(
                    "% app=ecc\ndiameter {}\nradius {}\ncenter {}\n",
                    e.diameter,
                    e.radius,
                    e.center
                        .iter()
                        .map(|v| (v + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            }
            App::MaxClique => render_vertex_set("maxclique", &algo::maximal_clique(&dcc)?),
            App::Cc | App::Matching => unreachable!(),
        };
        Ok((body, dual_s))
    } else {
        let body = match app {
            App::Cc => render_components(&algo::connected_components(cover), cover.n()),
            App::Matching => render_matching(&algo::maximal_matching(cover)),
            _ => unreachable!(),
        };
        Ok((body, 0.0))
    }
}

fn run_on_graph(app: App, g: &Graph, source: Option<u64>) -> Result<String> {
    use dcc_core::algo::baseline as bl;
    let all: Vec<u32> = g.vertices().collect();
    Ok(match app {
        App::Cc => {
            let (label, count) = bl::baseline_components(g);
            let mut out = format!("% app=cc components={count}\n");
            for v in g.vertices() {
                writeln!(out, "{} {}", v + 1, label[v as usize]).unwrap();
            }
            out
        }
        App::Bfs => {
            let s = resolve_source(source, g.n(), all.first().copied())?;
            render_bfs(&bl::baseline_bfs(g, s)?, s)
        }
        App::BfsForest => {
            let (parent, _) = bl::baseline_bfs_forest(g);
            render_parents("bfs-forest", &parent, &all, g.n())
        }
        App::Dfs => render_parents("dfs", &bl::baseline_dfs_forest(g), &all, g.n()),
        App::Matching => {
            let edges = bl::baseline_matching(g);
            let mut out = format!("% app=matching edges={}\n", edges.len());
            for (u, v) in edges {
                writeln!(out, "{} {}", u + 1, v + 1).unwrap();
            }
            out
        }
        App::Mis => render_vertex_set("mis", &bl::baseline_mis(g)),
        App::Color => render_colors(&bl::baseline_first_fit(g, &all), &all),
        App::Kcore => {
            let r = bl::baseline_kcore(g);
            render_kcore(&r, &all)
        }
        App::Ecc => {
            let (d, r, c) = bl::baseline_eccentricities(g)?;
            format!(
                "% app=ecc\ndiameter {d}\nradius {r}\ncenter {}\n",
                c.iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        }
        App::MaxClique => {
            let mut clique = vec![*all.first().ok_or(Error::EmptyCover)?];
            let mut cands: Vec<u32> = g.neighbors(clique[0]).to_vec();
            while let Some(&v) = cands.first() {
                clique.push(v);
                cands.retain(|&u| u != v && g.has_edge(u, v));
            }
            clique.sort_unstable();
            render_vertex_set("maxclique", &clique)
        }
    })
}

fn render_bfs(r: &algo::BfsResult, s: u32) -> String {
    let mut out = format!("% app=bfs source={}\n", s + 1);
    for (v, &d) in r.dist.iter().enumerate() {
        let dist = if d == INFINITY {
            "inf".to_string()
        } else {
            d.to_string()
        };
        let parent = match r.parent[v] {
            Some(p) => (p + 1).to_string(),
            None => "-".to_string(),
        };
        writeln!(out, "{} {} {}", v + 1, dist, parent).unwrap();
    }
    out
}

fn render_parents(app: &str, parent: &[Option<u32>], universe: &[u32], n: usize) -> String {
    let mut out = format!("% app={app}\n");
    for &v in universe {
        match parent[v as usize] {
            Some(p) => writeln!(out, "{} {}", v + 1, p + 1).unwrap(),
            None => writeln!(out, "{} -", v + 1).unwrap(),
        }
    }
    out.push_str(&uncovered_comment(n, universe));
    out
}

fn render_components(c: &algo::ComponentLabels, n: usize) -> String {
    let mut out = format!("% app=cc components={}\n", c.count);
    let mut uncovered = Vec::new();
    for v in 0..n as u32 {
        match c.label[v as usize] {
            Some(l) => writeln!(out, "{} {}", v + 1, l).unwrap(),
            None => uncovered.push((v + 1).to_string()),
        }
    }
    if !uncovered.is_empty() {
        writeln!(out, "% uncovered vertices: {}", uncovered.join(" ")).unwrap();
    }
    out
}

fn render_matching(m: &algo::Matching) -> String {
    let mut out = format!(
        "% app=matching edges={} vertex_cover={}\n",
        m.edges.len(),
        m.vertex_cover.len()
    );
    for &(u, v) in &m.edges {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn render_vertex_set(app: &str, set: &[u32]) -> String {
    let mut out = format!("% app={app} size={}\n", set.len());
    for &v in set {
        writeln!(out, "{}", v + 1).unwrap();
    }
    out
}

fn render_colors(colors: &[u32], universe: &[u32]) -> String {
    let used = universe
        .iter()
        .map(|&v| colors[v as usize])
        .max()
        .unwrap_or(0);
    let mut out = format!("% app=color colors={used}\n");
    for &v in universe {
        writeln!(out, "{} {}", v + 1, colors[v as usize]).unwrap();
    }
    out
}

fn render_kcore(r: &algo::CorenessResult, universe: &[u32]) -> String {
    let mut out = format!("% app=kcore degeneracy={}\n", r.degeneracy);
    for &v in universe {
        writeln!(out, "{} {}", v + 1, r.core[v as usize]).unwrap();
    }
    out
}

fn cmd_bench(
    graph: &Path,
    cover: &Path,
    apps: Option<&str>,
    reps: usize,
    constructor: &str,
    format: ReportFormat,
    out: Option<&Path>,
) -> Result<()> {
    let apps: Vec<App> = match apps {
        None => App::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(App::parse)
            .collect::<Result<_>>()?,
    };
    let report = run_bench(graph, cover, &apps, reps, constructor)?;
    let body = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    };
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => println!("{body}"),
    }
    Ok(())
}
