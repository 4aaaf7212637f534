//! The `confspace` command line.

pub mod cache;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arrangement::{
    config_rank_formula, configuration_arrangement_with, equivariant_gm, full_stabilizer_degree_with,
    gm_cohomology,
};
use crate::cohomology::{
    chisholm_bound, dual_sw_expansion, euler_class_zeta, euler_class_zeta_h, fh_index_bounds,
    fh_index_prime, poly_divides, IdealDescriptor,
};
use crate::complex::{chain_complex, order_complex, Region};
use crate::error::{Error, Result};
use crate::group::regular_embedding_with;
use crate::limits::Limits;
use crate::linalg::{homology, Coefficients, Solution};
use crate::obstruction::{
    builtin_system_with, integer_solvable, parse_bracket_system, symn_map_exists, zn_map_exists,
    IntegerSystem, LabelMode, SystemDocument, SystemVerdict,
};
use crate::partition::PartitionLattice;
use crate::representation::partition_lattice_module;
use crate::whitney::{whitney_e2, FaceRange};
use cache::{Cache, CachedOutput};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "confspace", version, about = "Partition lattices, configuration-space cohomology and equivariant obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached results.
    #[arg(long, global = true, env = "CONFSPACE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest Bell number of a lattice that may be built.
    #[arg(long, global = true)]
    max_bell: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Cyclic,
    Symmetric,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The partition lattice Π_n.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Include every element and comparable pair.
        #[arg(long)]
        list: bool,
    },
    /// Reduced homology of the order complex of Π̄_n.
    Homology {
        #[arg(long)]
        pi: usize,
        #[arg(long, default_value = "Z")]
        coeff: Coefficients,
    },
    /// Z/p-module structure of the top homology of Δ(Π̄_p) over F_p.
    PiModule {
        #[arg(long)]
        p: u64,
    },
    /// Cohomology of F(R^d, n); with --p, orbit data for the regular (Z/p)^k.
    Gm {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value = "Z")]
        coeff: Coefficients,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// E² ranks of the Whitney-homology complex of Π_n.
    Whitney {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Drop only interior faces in the differential.
        #[arg(long)]
        strict: bool,
    },
    /// Fadell–Husseini index of F(R^d, p^k).
    Index {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long)]
        k: Option<u32>,
        /// Recompute N by an orbit scan over Π_{p^k}.
        #[arg(long)]
        scan: bool,
    },
    /// Euler classes ζ and ζ_H in H*((Z/p)^k; F_p).
    Zeta {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Spanning vectors of H, e.g. "1,0" or "1,0,0;0,1,0".
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Dual Stiefel–Whitney expansion for d = 2^l, k = 2^m.
    DualSw {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
    /// Integer obstruction systems and map-existence verdicts.
    Obstruction {
        #[arg(long)]
        builtin: Option<String>,
        /// A system in bracket notation, or a JSON document.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Existence verdict for this n.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "cyclic")]
        group: GroupArg,
        /// Treat labels as raw strings.
        #[arg(long)]
        strict_labels: bool,
    },
    /// Smallest degree with a partition fixed by the regular (Z/p)^k.
    StabDegree {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
}

struct Output {
    name: &'static str,
    params: Value,
    result: Value,
    text: String,
    exit: i32,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(b) = cli.max_bell {
        limits.max_bell = b;
    }
    let (name, params) = describe(&cli.command);
    let key = Cache::key(name, &params.to_string());
    let cache = cli.cache_dir.as_ref().map(Cache::new);
    let cached = cache.as_ref().and_then(|c| c.load(&key));
    let payload = match cached {
        Some(p) => p,
        None => match execute(&cli.command, &limits) {
            Ok(out) => {
                let json = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": out.name,
                    "params": out.params,
                    "result": out.result,
                });
                let payload = CachedOutput {
                    json,
                    text: out.text,
                    exit: out.exit,
                };
                if let Some(c) = &cache {
                    if let Err(e) = c.store(&key, &payload) {
                        let _ = writeln!(stderr, "warning: could not write cache entry: {e}");
                    }
                }
                payload
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
        },
    };
    let written = if cli.json {
        let mut s = serde_json::to_string_pretty(&payload.json).expect("plain data");
        s.push('\n');
        stdout.write_all(s.as_bytes())
    } else {
        stdout.write_all(payload.text.as_bytes())
    };
    if written.is_err() {
        return 2;
    }
    payload.exit
}

/// Subcommand name and its canonical parameters, which also key the cache.
fn describe(cmd: &Command) -> (&'static str, Value) {
    match cmd {
        Command::Partitions { n, list } => ("partitions", json!({"n": n, "list": list})),
        Command::Homology { pi, coeff } => ("homology", json!({"pi": pi, "coeff": coeff})),
        Command::PiModule { p } => ("pi-module", json!({"p": p})),
        Command::Gm { n, d, coeff, p, k } => ("gm", json!({"n": n, "d": d, "coeff": coeff, "p": p, "k": k})),
        Command::Whitney { n, d, p, strict } => ("whitney", json!({"n": n, "d": d, "p": p, "strict": strict})),
        Command::Index { p, d, k, scan } => ("index", json!({"p": p, "d": d, "k": k, "scan": scan})),
        Command::Zeta { p, k, h, d } => ("zeta", json!({"p": p, "k": k, "h": h, "d": d})),
        Command::DualSw { d, k } => ("dual-sw", json!({"d": d, "k": k})),
        Command::Obstruction {
            builtin,
            file,
            n,
            group,
            strict_labels,
        } => {
            let contents = file.as_ref().map(|f| std::fs::read_to_string(f).unwrap_or_default());
            (
                "obstruction",
                json!({
                    "builtin": builtin,
                    "file_contents": contents,
                    "n": n,
                    "group": format!("{group:?}").to_lowercase(),
                    "strict_labels": strict_labels,
                }),
            )
        }
        Command::StabDegree { p, k, d } => ("stab-degree", json!({"p": p, "k": k, "d": d})),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data")
}

fn execute(cmd: &Command, limits: &Limits) -> Result<Output> {
    let (name, params) = describe(cmd);
    let (result, text, exit) = match cmd {
        Command::Partitions { n, list } => partitions(*n, *list, limits)?,
        Command::Homology { pi, coeff } => pi_homology(*pi, *coeff, limits)?,
        Command::PiModule { p } => pi_module(*p, limits)?,
        Command::Gm { n, d, coeff, p, k } => gm(*n, *d, *coeff, *p, *k, limits)?,
        Command::Whitney { n, d, p, strict } => whitney(*n, *d, *p, *strict, limits)?,
        Command::Index { p, d, k, scan } => index(*p, *d, *k, *scan)?,
        Command::Zeta { p, k, h, d } => zeta(*p, *k, h.as_deref(), *d)?,
        Command::DualSw { d, k } => dual_sw(*d, *k)?,
        Command::Obstruction {
            builtin,
            file,
            n,
            group,
            strict_labels,
        } => obstruction(builtin.as_deref(), file.as_ref(), *n, *group, *strict_labels)?,
        Command::StabDegree { p, k, d } => stab_degree(*p, *k, *d, limits)?,
    };
    Ok(Output {
        name,
        params,
        result,
        text,
        exit,
    })
}

type Rendered = (Value, String, i32);

fn partitions(n: usize, list: bool, limits: &Limits) -> Result<Rendered> {
    let lat = PartitionLattice::with_limits(n, limits)?;
    let mut by_size = vec![0usize; n + 1];
    for pi in lat.elements() {
        by_size[pi.size()] += 1;
    }
    let bottom = lat.element(lat.bottom()).clone();
    let top = lat.element(lat.top()).clone();
    let mobius = if n <= 7 { Some(lat.mobius(&bottom, &top)?) } else { None };
    let mut text = String::new();
    writeln!(text, "Pi_{n}: {} partitions", lat.len()).ok();
    writeln!(text, "bottom {bottom}").ok();
    writeln!(text, "top {top}").ok();
    let sizes: Vec<String> = (1..=n).map(|s| format!("{s}:{}", by_size[s])).collect();
    writeln!(text, "by number of blocks {}", sizes.join(" ")).ok();
    if let Some(m) = mobius {
        writeln!(text, "mobius(bottom, top) = {m}").ok();
    }
    let mut result = json!({
        "n": n,
        "count": lat.len(),
        "bottom": bottom,
        "top": top,
        "by_size": by_size[1..],
        "mobius": mobius,
    });
    if list {
        for pi in lat.elements() {
            writeln!(text, "{pi}").ok();
        }
        result["lattice"] = to_value(&lat.to_document());
    }
    Ok((result, text, 0))
}

fn pi_homology(n: usize, coeff: Coefficients, limits: &Limits) -> Result<Rendered> {
    let lat = PartitionLattice::with_limits(n, limits)?;
    let sc = order_complex(&lat, Region::ProperPart)?;
    let h = homology(&chain_complex(&sc, coeff));
    let mut text = String::new();
    writeln!(text, "reduced homology of the proper part of Pi_{n} over {coeff}").ok();
    writeln!(text, "faces by dimension {:?}", sc.f_vector()).ok();
    for dh in &h.degrees {
        let torsion = if dh.torsion.is_empty() {
            "none".to_string()
        } else {
            dh.torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        };
        match coeff {
            Coefficients::Integers => writeln!(text, "degree {}: rank {}, torsion {torsion}", dh.degree, dh.betti),
            Coefficients::Prime(_) => writeln!(text, "degree {}: rank {}", dh.degree, dh.betti),
        }
        .ok();
    }
    let result = json!({"n": n, "f_vector": sc.f_vector(), "homology": h});
    Ok((result, text, 0))
}

fn pi_module(p: u64, limits: &Limits) -> Result<Rendered> {
    let lat = PartitionLattice::with_limits(p as usize, limits)?;
    let r = partition_lattice_module(p, &lat)?;
    let d = &r.descriptor;
    let mut text = String::new();
    writeln!(text, "H_{}(proper part of Pi_{p}; F_{p}) under {}", r.degree, r.generator).ok();
    writeln!(text, "dimension {}, generator order {}", r.dimension, r.order).ok();
    writeln!(text, "Jordan blocks {:?}", r.jordan_type.sizes).ok();
    writeln!(
        text,
        "free_rank {}, k_multiplicity {}, trivial_rank {}, other {:?}",
        d.free_rank, d.k_multiplicity, d.trivial_rank, d.other
    )
    .ok();
    writeln!(text, "expected (free, K, trivial) = {:?}: {}", r.expected, yes(d.triple() == r.expected)).ok();
    let mut result = to_value(&r);
    result["free_rank"] = json!(d.free_rank);
    result["k_multiplicity"] = json!(d.k_multiplicity);
    result["trivial_rank"] = json!(d.trivial_rank);
    Ok((result, text, 0))
}

fn gm(
    n: Option<usize>,
    d: usize,
    coeff: Coefficients,
    p: Option<u64>,
    k: Option<usize>,
    limits: &Limits,
) -> Result<Rendered> {
    if d < 2 {
        return Err(Error::InvalidArgument("need d ≥ 2".into()));
    }
    if let Some(p) = p {
        let k = k.unwrap_or(1);
        let group = regular_embedding_with(p as usize, k, limits)?;
        let size = group.degree();
        if n.is_some_and(|n| n != size) {
            return Err(Error::InvalidArgument(format!("--n must equal p^k = {size}")));
        }
        let lat = PartitionLattice::with_limits(size, limits)?;
        let r = equivariant_gm(&lat, d, &group, p)?;
        let mut text = String::new();
        writeln!(text, "H*(F(R^{d}, {size})) over the regular (Z/{p})^{k}, order {}", r.group_order).ok();
        for e in &r.degrees {
            writeln!(text, "degree {}: rank {}", e.degree, e.rank).ok();
            for c in &e.contributions {
                writeln!(
                    text,
                    "  {} orbit {} stabilizer {} interval {} induced {}{}",
                    c.rep,
                    c.orbit_size,
                    c.stab_order,
                    c.interval_rank,
                    c.induced_dim,
                    if c.full_stabilizer { " full" } else { "" }
                )
                .ok();
            }
        }
        if let Some(deg) = r.first_full_stabilizer_degree() {
            writeln!(text, "first positive degree with a fully stabilized orbit: {deg}").ok();
        }
        return Ok((to_value(&r), text, 0));
    }
    let n = n.ok_or_else(|| Error::InvalidArgument("gm needs --n (or --p)".into()))?;
    let lat = configuration_arrangement_with(n, d, limits)?;
    let computed = gm_cohomology(&lat, coeff)?;
    let closed = config_rank_formula(n, d)?;
    let agree = computed.ranks() == closed.ranks();
    let mut text = String::new();
    writeln!(text, "H*(F(R^{d}, {n}); {coeff})").ok();
    for g in &computed.degrees {
        writeln!(text, "degree {}: rank {}", g.degree, g.rank).ok();
    }
    writeln!(text, "total rank {}", computed.total_rank()).ok();
    writeln!(text, "closed form agrees: {}", yes(agree)).ok();
    let result = json!({"computed": computed, "closed_form": closed, "agree": agree});
    Ok((result, text, 0))
}

fn whitney(n: usize, d: usize, p: u64, strict: bool, limits: &Limits) -> Result<Rendered> {
    let lat = configuration_arrangement_with(n, d, limits)?;
    let faces = if strict { FaceRange::Interior } else { FaceRange::AllButTop };
    let w = whitney_e2(&lat, p, faces)?;
    let mut text = String::new();
    writeln!(text, "Whitney E2 for Pi_{n}, d = {d}, over F_{p} ({faces:?})").ok();
    for e in &w.e2 {
        writeln!(text, "E2[{}, {}] = {}", e.r, e.s, e.rank).ok();
    }
    writeln!(text, "boundary squares to zero: {}", yes(w.boundary_squares_to_zero)).ok();
    writeln!(text, "interval decomposition agrees: {}", yes(w.agrees)).ok();
    Ok((to_value(&w), text, 0))
}

fn ideal_text(ideal: &IdealDescriptor) -> String {
    match ideal {
        IdealDescriptor::Truncation { min_degree } => format!("H^(>= {min_degree})"),
        IdealDescriptor::Generated { generators } => {
            let g: Vec<String> = generators.iter().map(ToString::to_string).collect();
            format!("<{}>", g.join(", "))
        }
    }
}

fn index(p: u64, d: u64, k: Option<u32>, scan: bool) -> Result<Rendered> {
    match k {
        Some(k) if k > 1 || scan => {
            let b = fh_index_bounds(p, k, d, scan)?;
            let mut text = String::new();
            writeln!(text, "Index of F(R^{d}, {p}^{k}) under (Z/{p})^{k}").ok();
            writeln!(text, "N = {}", b.n).ok();
            writeln!(text, "Index contained in H^(>= {})", b.upper_containment_degree).ok();
            writeln!(text, "Index meets H^{} nontrivially", b.nonvanishing_degree).ok();
            if let Some(s) = b.scanned_n {
                writeln!(text, "orbit scan N = {s}").ok();
            }
            for note in &b.notes {
                writeln!(text, "note: {note}").ok();
            }
            Ok((to_value(&b), text, 0))
        }
        _ => {
            let r = fh_index_prime(p, d)?;
            let mut text = String::new();
            writeln!(text, "Index of F(R^{d}, {p}) under Z/{p}: {}", ideal_text(&r.index)).ok();
            writeln!(text, "generators {}", ideal_text(&r.generators)).ok();
            writeln!(text, "presentations agree: {}", yes(r.presentations_agree)).ok();
            writeln!(
                text,
                "{} (degree {}) is not in the index",
                r.certificate.element, r.certificate.degree
            )
            .ok();
            if r.no_equivariant_map {
                writeln!(text, "no Z/{p}-map F(R^{d}, {p}) -> S(W_{p}^({})) exists", d - 1).ok();
            }
            Ok((to_value(&r), text, 0))
        }
    }
}

fn parse_vectors(s: &str) -> Result<Vec<Vec<u64>>> {
    s.split(';')
        .filter(|v| !v.trim().is_empty())
        .map(|v| {
            v.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad coordinate `{x}`")))
                })
                .collect()
        })
        .collect()
}

fn zeta(p: u64, k: usize, h: Option<&str>, d: Option<u32>) -> Result<Rendered> {
    let z = euler_class_zeta(p, k)?;
    let mut text = String::new();
    writeln!(text, "zeta({p}, {k}) = {}", z).ok();
    writeln!(text, "degree {}", z.degree().unwrap_or(0)).ok();
    let mut result = json!({"zeta": z, "degree": z.degree()});
    if let Some(h) = h {
        let vectors = parse_vectors(h)?;
        let zh = euler_class_zeta_h(p, k, &vectors)?;
        let exp = if p == 2 { 1 } else { 2 };
        let divides = poly_divides(&zh.poly_part().pow(exp), &z.poly_part().pow(exp))?.is_some();
        writeln!(text, "zeta_H = {zh}").ok();
        writeln!(text, "degree {}", zh.degree().unwrap_or(0)).ok();
        let what = if p == 2 { "zeta_H divides zeta" } else { "zeta_H^2 divides zeta^2" };
        writeln!(text, "{what}: {}", yes(divides)).ok();
        result["zeta_h"] = to_value(&zh);
        result["zeta_h_degree"] = json!(zh.degree());
        result["divides"] = json!(divides);
        if let Some(d) = d {
            let deg = zh.degree().unwrap_or(0) * d;
            writeln!(text, "degree of zeta_H^{d} = {deg}").ok();
            result["zeta_h_power_degree"] = json!(deg);
        }
    }
    Ok((result, text, 0))
}

fn log2_exact(x: u64, what: &str) -> Result<u32> {
    if x.is_power_of_two() && x > 1 {
        Ok(x.trailing_zeros())
    } else {
        Err(Error::InvalidArgument(format!("--{what} must be a power of 2 above 1, got {x}")))
    }
}

fn dual_sw(d: u64, k: u64) -> Result<Rendered> {
    let l = log2_exact(d, "d")?;
    let m = log2_exact(k, "k")?;
    let e = dual_sw_expansion(l, m)?;
    let bound = chisholm_bound(d, k)?;
    let mut text = String::new();
    writeln!(text, "dual Stiefel-Whitney class in degree {} for d = {d}, k = {k}", e.degree).ok();
    writeln!(text, "generator degrees {:?}", e.weights).ok();
    writeln!(text, "candidates {:?}", e.candidates).ok();
    writeln!(text, "odd coefficients {:?}", e.survivors).ok();
    writeln!(text, "nonzero: {}", yes(e.nonzero)).ok();
    writeln!(text, "no {k}-regular map R^{d} -> R^{bound}").ok();
    let result = json!({"expansion": e, "chisholm_bound": bound});
    Ok((result, text, 0))
}

fn load_system(builtin: Option<&str>, file: Option<&PathBuf>, mode: LabelMode) -> Result<IntegerSystem> {
    match (builtin, file) {
        (Some(name), None) => builtin_system_with(name, mode),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
            if text.trim_start().starts_with('{') {
                let doc: SystemDocument = serde_json::from_str(&text)?;
                let labels = doc
                    .labels
                    .iter()
                    .map(|l| crate::obstruction::normalize_label(l, mode).map_err(Error::InvalidArgument))
                    .collect::<Result<Vec<_>>>()?;
                // canonicalizing may merge columns, so rebuild through the parser
                let sys = IntegerSystem::from_document(SystemDocument { labels: doc.labels.clone(), ..doc }, LabelMode::Strict)?;
                if labels.iter().collect::<std::collections::HashSet<_>>().len() == labels.len() {
                    return IntegerSystem::new(labels, sys.matrix, sys.rhs, mode);
                }
                parse_bracket_system(&sys.to_string(), mode)
            } else {
                parse_bracket_system(&text, mode)
            }
        }
        _ => Err(Error::InvalidArgument("give exactly one of --builtin, --file or --n".into())),
    }
}

fn verdict_text(v: &SystemVerdict, labels: &[String]) -> String {
    let mut s = String::new();
    match &v.solution {
        Solution::Solvable { x } => {
            writeln!(s, "solvable").ok();
            let parts: Vec<String> = labels.iter().zip(x).map(|(l, v)| format!("x_{l} = {v}")).collect();
            writeln!(s, "witness {}", parts.join(", ")).ok();
        }
        Solution::Unsolvable { certificate } => {
            writeln!(s, "unsolvable").ok();
            writeln!(s, "certificate {}", serde_json::to_string(certificate).expect("plain data")).ok();
        }
    }
    s
}

fn obstruction(
    builtin: Option<&str>,
    file: Option<&PathBuf>,
    n: Option<u64>,
    group: GroupArg,
    strict_labels: bool,
) -> Result<Rendered> {
    if let Some(n) = n {
        if builtin.is_some() || file.is_some() {
            return Err(Error::InvalidArgument("--n cannot be combined with a system".into()));
        }
        let v = match group {
            GroupArg::Cyclic => zn_map_exists(n)?,
            GroupArg::Symmetric => symn_map_exists(n)?,
        };
        let g = match group {
            GroupArg::Cyclic => format!("Z/{n}"),
            GroupArg::Symmetric => format!("Sym_{n}"),
        };
        let text = format!(
            "{g}-map F(R^d, {n}) -> S(W_{n}^(d-1)): {} ({})\n",
            if v.exists { "exists" } else { "does not exist" },
            serde_json::to_value(v.rationale).expect("plain data").as_str().unwrap_or("")
        );
        return Ok((to_value(&v), text, if v.exists { 0 } else { 1 }));
    }
    let primary = if strict_labels || builtin.is_some() { LabelMode::Strict } else { LabelMode::Canonical };
    let other = match primary {
        LabelMode::Strict => LabelMode::Canonical,
        LabelMode::Canonical => LabelMode::Strict,
    };
    let sys = load_system(builtin, file, primary)?;
    let alt = load_system(builtin, file, other)?;
    let v = integer_solvable(&sys)?;
    let va = integer_solvable(&alt)?;
    let mut text = String::new();
    writeln!(text, "{} equations, {} variables ({:?} labels)", v.equations, v.variables, primary).ok();
    text.push_str(&verdict_text(&v, &sys.labels));
    writeln!(
        text,
        "with {:?} labels: {} equations, {} variables, {}",
        other,
        va.equations,
        va.variables,
        if va.solvable() { "solvable" } else { "unsolvable" }
    )
    .ok();
    let result = json!({
        "labels": sys.labels,
        "verdict": v,
        "alternate": {"labels": alt.labels, "verdict": va},
    });
    Ok((result, text, if v.solvable() { 0 } else { 1 }))
}

fn stab_degree(p: usize, k: usize, d: usize, limits: &Limits) -> Result<Rendered> {
    let s = full_stabilizer_degree_with(p, k, d, limits)?;
    let mut text = String::new();
    writeln!(text, "N = {} for p = {p}, k = {k}, d = {d}", s.degree).ok();
    writeln!(text, "(d-1)(p^k - p^(k-1)) = {}", s.formula).ok();
    writeln!(text, "fixed partitions {}", s.representatives.join(", ")).ok();
    writeln!(text, "orbits scanned {}", s.orbits_scanned).ok();
    Ok((to_value(&s), text, 0))
}
