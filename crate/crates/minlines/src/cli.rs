//! Command-line front end: argument parsing, JSON/table rendering, the
//! bundled example corpus, and the property sweeps.
//!
//! All user-facing indices (simple roots, word letters, curve and block
//! positions) are 1-based; the library is 0-based internally.

use crate::rootsys::{Root, RootSystem};
use crate::schubert::{self, FlagSpace, LineSpaceReport, SchubertVariety, TStableCurve};
use crate::weyl::{self, ParabolicSet, WeylElement, Word};
use crate::{bottsam, corpus, enum_cap, perrin, Error, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "minlines",
    version,
    about = "Minimal rational curves on Schubert varieties: root systems, Weyl \
             combinatorics, Bott-Samelson words, quiver decompositions"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Render output as an indented key/value listing instead of JSON.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe a root system: Cartan matrix, positive roots, minuscule nodes.
    RootSystem {
        #[arg(long = "type")]
        ty: String,
        /// Comma-separated 1-based simple-root indices of a Levi subset.
        #[arg(long)]
        levi: Option<String>,
    },
    /// Describe a Weyl group element given by a word.
    Weyl {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        levi: Option<String>,
    },
    /// T-stable curves through wx in the Schubert variety X(w).
    Curves {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        levi: String,
        #[arg(long)]
        word: String,
    },
    /// The space of lines through a point of G/P at a single node.
    Lines {
        #[arg(long = "type")]
        ty: String,
        /// 1-based node of the maximal parabolic.
        #[arg(long)]
        node: usize,
    },
    /// Smoothness of a minuscule Schubert variety.
    Smooth {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        word: String,
    },
    /// Per-curve data on the Bott-Samelson variety of a reduced word.
    Bs {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        word: String,
    },
    /// The quiver of a minuscule reduced word: peaks and their colors.
    Quiver {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
    /// Construction-1 generalized decomposition for a peak ordering.
    Decompose {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
        /// "standard" or a comma list of 1-based peak colors, e.g. "4,2".
        #[arg(long = "peak-order", default_value = "standard")]
        peak_order: String,
    },
    /// Structural checks and stabilizer comparison for a decomposition.
    Check5 {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
        #[arg(long = "peak-order", default_value = "standard")]
        peak_order: String,
    },
    /// Minimal curve families on a generalized desingularization.
    Families {
        #[arg(long = "type")]
        ty: String,
        /// Explicit blocks separated by '|', e.g. "1|3 2".
        #[arg(long)]
        blocks: Option<String>,
        /// Word to decompose when --blocks is absent.
        #[arg(long)]
        word: Option<String>,
        #[arg(long = "peak-order", default_value = "standard")]
        peak_order: String,
    },
    /// Run the bundled example corpus.
    Corpus {
        /// Substring filter on case ids.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Exhaustive property sweeps.
    Sweep {
        /// "bott" (minimal-curve/exchange equivalence) or "section5".
        #[arg(long)]
        kind: String,
        #[arg(long = "type")]
        ty: String,
        /// 1-based node restricting a section5 sweep.
        #[arg(long)]
        node: Option<usize>,
    },
}

fn parse_levi(s: &str, rank: usize) -> Result<ParabolicSet> {
    let mut out = ParabolicSet::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Input(format!("bad Levi entry `{tok}`")))?;
        if v == 0 || v > rank {
            return Err(Error::BadIndex(v));
        }
        out.insert(v - 1);
    }
    Ok(out)
}

fn one_based(set: &ParabolicSet) -> Vec<usize> {
    set.iter().map(|&i| i + 1).collect()
}

fn root_json(r: &Root) -> Value {
    json!(r.0)
}

fn line_space_json(rep: &LineSpaceReport) -> Value {
    json!({
        "dimension": rep.dimension,
        "label": rep.label,
        "stabilizer_levi": rep.stabilizer_levi.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "levi_type": rep.levi_type.iter().map(|c| json!({
            "type": c.dtype.to_string(),
            "nodes": c.nodes.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn element(sys: &Arc<RootSystem>, word: &str) -> Result<(WeylElement, Word, bool)> {
    let w = Word::parse(word, sys.rank())?;
    let (e, reduced) = WeylElement::from_word(sys, &w)?;
    Ok((e, w, reduced))
}

fn curve_rows(space: &FlagSpace, curves: &[TStableCurve]) -> Result<Vec<Value>> {
    let sys = &space.system;
    let mut rows = Vec::new();
    for c in curves {
        let mut degrees = serde_json::Map::new();
        for a in 0..sys.rank() {
            if space.levi.contains(&a) {
                continue;
            }
            let lambda = sys.fundamental_weight(a)?;
            degrees.insert(
                format!("w{}", a + 1),
                json!(schubert::curve_degree(space, c, &lambda)?),
            );
        }
        let antican = schubert::anticanonical_degree(space, c);
        if antican != schubert::anticanonical_degree_canonical(space, c) {
            return Err(Error::Internal("anticanonical cross-check failed".into()));
        }
        rows.push(json!({
            "beta": root_json(&c.beta),
            "degrees": Value::Object(degrees),
            "antican": antican,
        }));
    }
    Ok(rows)
}

fn parse_peak_order(q: &perrin::Quiver, spec: &str) -> Result<perrin::PeakOrdering> {
    if spec.trim() == "standard" {
        return Ok(perrin::PeakOrdering::standard(q));
    }
    let mut colors = Vec::new();
    for tok in spec.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Input(format!("bad peak color `{tok}`")))?;
        if v == 0 || v > q.system.rank() {
            return Err(Error::BadIndex(v));
        }
        colors.push(v - 1);
    }
    perrin::PeakOrdering::from_colors(q, &colors)
}

fn decomposition(
    sys: &Arc<RootSystem>,
    word: &str,
    peak_order: &str,
) -> Result<(perrin::Quiver, perrin::GeneralizedDecomposition)> {
    let w = Word::parse(word, sys.rank())?;
    let q = perrin::build_quiver(sys, &w)?;
    let order = parse_peak_order(&q, peak_order)?;
    let d = perrin::construction1(&q, &order)?;
    Ok((q, d))
}

fn family_rows(reports: &[perrin::MinimalFamilyReport]) -> Vec<Value> {
    reports
        .iter()
        .map(|r| {
            json!({
                "block": r.block,
                "alpha": r.alpha + 1,
                "heights": [r.heights.0, r.heights.1],
                "minimal": r.is_minimal,
                "dimension": r.dimension,
                "fiber": r.fiber.as_ref().map(line_space_json),
            })
        })
        .collect()
}

fn run_cmd(cmd: &Cmd) -> Result<Value> {
    match cmd {
        Cmd::RootSystem { ty, levi } => {
            let sys = RootSystem::parse(ty)?;
            let mut out = json!({
                "type": sys.type_string(),
                "rank": sys.rank(),
                "cartan": sys.cartan(),
                "num_positive_roots": sys.num_positive_roots(),
                "positive_roots": sys.positive_roots().iter().map(root_json).collect::<Vec<_>>(),
                "minuscule_nodes": (0..sys.rank())
                    .filter(|&i| sys.is_minuscule_weight(i).unwrap_or(false))
                    .map(|i| i + 1)
                    .collect::<Vec<_>>(),
            });
            if sys.is_irreducible() {
                out["highest_root"] = root_json(&sys.highest_root()?);
            }
            if let Some(levi) = levi {
                let subset = parse_levi(levi, sys.rank())?;
                out["levi"] = json!({
                    "nodes": one_based(&subset),
                    "num_positive_roots": sys.positive_roots_of(&subset).len(),
                    "components": sys.classify_subset(&subset)?.iter().map(|c| json!({
                        "type": c.dtype.to_string(),
                        "nodes": c.nodes.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
            }
            Ok(out)
        }
        Cmd::Weyl { ty, word, levi } => {
            let sys = RootSystem::parse(ty)?;
            let (e, given, reduced) = element(&sys, word)?;
            let (upper, lower, perp) = e.parabolic_invariants();
            let mut out = json!({
                "given_word": given.to_string(),
                "given_reduced": reduced,
                "word": e.reduced_word().to_string(),
                "length": e.length(),
                "support": one_based(&e.support()),
                "inversions": e.inversion_set().iter().map(root_json).collect::<Vec<_>>(),
                "i_upper": one_based(&upper),
                "i_lower": one_based(&lower),
                "perp": one_based(&perp),
                "minuscule": e.is_minuscule().ok(),
            });
            if let Some(levi) = levi {
                let subset = parse_levi(levi, sys.rank())?;
                out["min_coset_rep"] = json!(e.min_coset_rep(&subset).reduced_word().to_string());
            }
            Ok(out)
        }
        Cmd::Curves { ty, levi, word } => {
            let sys = RootSystem::parse(ty)?;
            let space = FlagSpace::new(&sys, parse_levi(levi, sys.rank())?)?;
            let (e, _, reduced) = element(&sys, word)?;
            if !reduced {
                return Err(Error::NotReduced);
            }
            let x = SchubertVariety::new(space.clone(), e)?;
            let curves = schubert::t_curves_through_schubert(&x);
            Ok(json!({
                "w": x.w.reduced_word().to_string(),
                "curves": curve_rows(&space, &curves)?,
            }))
        }
        Cmd::Lines { ty, node } => {
            let sys = RootSystem::parse(ty)?;
            if *node == 0 || *node > sys.rank() {
                return Err(Error::BadIndex(*node));
            }
            let space = FlagSpace::maximal(&sys, node - 1)?;
            let rep = schubert::lines_through_point_space(&space)?;
            Ok(line_space_json(&rep))
        }
        Cmd::Smooth { ty, node, word } => {
            let sys = RootSystem::parse(ty)?;
            if *node == 0 || *node > sys.rank() {
                return Err(Error::BadIndex(*node));
            }
            let space = FlagSpace::maximal(&sys, node - 1)?;
            let (e, _, reduced) = element(&sys, word)?;
            if !reduced {
                return Err(Error::NotReduced);
            }
            let x = SchubertVariety::new(space, e)?;
            Ok(json!({
                "w": x.w.reduced_word().to_string(),
                "smooth": schubert::is_smooth_minuscule(&x)?,
                "support": one_based(&x.w.support()),
                "i_lower": one_based(&x.w.i_lower()),
            }))
        }
        Cmd::Bs { ty, levi, word } => {
            let sys = RootSystem::parse(ty)?;
            let subset = match levi {
                Some(l) => parse_levi(l, sys.rank())?,
                None => ParabolicSet::new(),
            };
            let space = FlagSpace::new(&sys, subset)?;
            let w = Word::parse(word, sys.rank())?;
            let x = bottsam::BSVariety::new(space, w)?;
            let betas = bottsam::beta_sequence(&x);
            let minimal = bottsam::minimal_curves_bs(&x)?;
            let rows: Vec<Value> = (1..=x.len())
                .map(|j| -> Result<Value> {
                    let min = minimal.iter().find(|c| c.j == j);
                    Ok(json!({
                        "j": j,
                        "beta": root_json(&betas[j - 1]),
                        "antican": bottsam::anticanonical_degree_bs(&x, j)?,
                        "is_line": bottsam::is_line_bs(&x, j)?,
                        "minimal": min.is_some(),
                        "target": min.map(|c| c.target + 1),
                    }))
                })
                .collect::<Result<_>>()?;
            Ok(json!({ "word": x.word.to_string(), "curves": rows }))
        }
        Cmd::Quiver { ty, word } => {
            let sys = RootSystem::parse(ty)?;
            let w = Word::parse(word, sys.rank())?;
            let q = perrin::build_quiver(&sys, &w)?;
            Ok(json!({
                "word": q.word.to_string(),
                "peaks": q.peaks,
                "peak_colors": q.peaks.iter().map(|&p| q.color(p) + 1).collect::<Vec<_>>(),
            }))
        }
        Cmd::Decompose {
            ty,
            word,
            peak_order,
        } => {
            let sys = RootSystem::parse(ty)?;
            let (q, d) = decomposition(&sys, word, peak_order)?;
            let goodness = perrin::goodness_check(&d)?;
            Ok(json!({
                "peaks": q.peaks,
                "peak_colors": q.peaks.iter().map(|&p| q.color(p) + 1).collect::<Vec<_>>(),
                "blocks": d.blocks.iter()
                    .map(|b| b.element.reduced_word().to_string())
                    .collect::<Vec<_>>(),
                "block_letters": d.blocks.iter().map(|b| b.letters.clone()).collect::<Vec<_>>(),
                "goodness": goodness.rows.iter().map(|r| json!({
                    "i": r.i,
                    "left_ok": r.left_ok,
                    "right_ok": r.right_ok,
                    "left_lhs": r.left_lhs.iter().map(|&a| a + 1).collect::<Vec<_>>(),
                    "tail_lower": r.tail_lower.iter().map(|&a| a + 1).collect::<Vec<_>>(),
                    "right_rhs": r.right_rhs.iter().map(|&a| a + 1).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }))
        }
        Cmd::Check5 {
            ty,
            word,
            peak_order,
        } => {
            let sys = RootSystem::parse(ty)?;
            let (_, d) = decomposition(&sys, word, peak_order)?;
            let rep = perrin::section5_checks(&d)?;
            let (a_set, b_set, equal) = perrin::stabilizer_weyl_groups(&d)?;
            Ok(json!({
                "a_ok": rep.a_ok,
                "a_colors": rep.a_colors.iter().map(|&c| c + 1).collect::<Vec<_>>(),
                "b_ok": rep.b_ok,
                "c_ok": rep.c_ok,
                "d_ok": rep.d_ok,
                "d_vacuous": rep.d_vacuous,
                "d_block_root": root_json(&rep.d_pair.0),
                "d_full_root": root_json(&rep.d_pair.1),
                "e_ok": rep.e_ok,
                "all_ok": rep.all_ok,
                "stabilizers_equal": equal,
                "stabilizer_sizes": [a_set.len(), b_set.len()],
            }))
        }
        Cmd::Families {
            ty,
            blocks,
            word,
            peak_order,
        } => {
            let sys = RootSystem::parse(ty)?;
            let d = match (blocks, word) {
                (Some(spec), _) => {
                    let words: Vec<Word> = spec
                        .split('|')
                        .map(|part| Word::parse(part, sys.rank()))
                        .collect::<Result<_>>()?;
                    perrin::GeneralizedDecomposition::from_blocks(&sys, &words)?
                }
                (None, Some(word)) => decomposition(&sys, word, peak_order)?.1,
                (None, None) => {
                    return Err(Error::Input("provide --blocks or --word".into()));
                }
            };
            let reports = perrin::minimal_families_generalized(&d)?;
            Ok(json!({
                "blocks": d.blocks.iter()
                    .map(|b| b.element.reduced_word().to_string())
                    .collect::<Vec<_>>(),
                "families": family_rows(&reports),
            }))
        }
        Cmd::Corpus { filter } => corpus::run_corpus(filter.as_deref()),
        Cmd::Sweep { kind, ty, node } => match kind.as_str() {
            "bott" => sweep_bott(ty),
            "section5" => sweep_section5(ty, *node),
            other => Err(Error::Input(format!("unknown sweep kind `{other}`"))),
        },
    }
}

/// All minuscule elements of the system at `node` (minimal representatives
/// for the maximal parabolic, excluding the identity).
pub fn minuscule_elements(sys: &Arc<RootSystem>, node: usize) -> Result<Vec<WeylElement>> {
    if !sys.is_minuscule_weight(node)? {
        return Err(Error::NotMinuscule);
    }
    let levi: ParabolicSet = (0..sys.rank()).filter(|&i| i != node).collect();
    let reps = weyl::enumerate_min_reps(sys, &levi, enum_cap())?;
    Ok(reps.into_iter().filter(|w| !w.is_identity()).collect())
}

/// For every reduced word of every minuscule element: the minimal-curve
/// classification is internally consistent (simple suffix image, exchange
/// identity, target set) and the last position is always minimal.
pub fn sweep_bott(ty: &str) -> Result<Value> {
    let sys = RootSystem::parse(ty)?;
    let mut words = 0usize;
    let mut elements = 0usize;
    for node in 0..sys.rank() {
        if !sys.is_minuscule_weight(node)? {
            continue;
        }
        let space = FlagSpace::maximal(&sys, node)?;
        for w in minuscule_elements(&sys, node)? {
            elements += 1;
            for word in w.all_reduced_words() {
                words += 1;
                let x = bottsam::BSVariety::new(space.clone(), word)?;
                // minimal_curves_bs verifies the exchange identity and the
                // target set internally and errors on any mismatch.
                let minimal = bottsam::minimal_curves_bs(&x)?;
                let last = x.len();
                if !minimal.iter().any(|c| c.j == last) {
                    return Err(Error::Internal("last position not minimal".into()));
                }
                for c in &minimal {
                    if bottsam::anticanonical_degree_bs(&x, c.j)? != 2 {
                        return Err(Error::Internal("minimal curve of degree > 2".into()));
                    }
                }
                for j in 1..=last {
                    let deg = bottsam::anticanonical_degree_bs(&x, j)?;
                    let is_min = minimal.iter().any(|c| c.j == j);
                    if (deg == 2) != is_min || deg < 2 {
                        return Err(Error::Internal(
                            "anticanonical degree does not detect minimality".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(json!({ "type": ty, "elements": elements, "words": words, "failures": 0 }))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// For every minuscule element at `node` (or all minuscule nodes), every
/// reduced word's lex-least representative, and every peak ordering: the
/// structural checks pass and the two stabilizers agree.
pub fn sweep_section5(ty: &str, node: Option<usize>) -> Result<Value> {
    let sys = RootSystem::parse(ty)?;
    let nodes: Vec<usize> = match node {
        Some(n) => {
            if n == 0 || n > sys.rank() {
                return Err(Error::BadIndex(n));
            }
            vec![n - 1]
        }
        None => (0..sys.rank())
            .filter(|&i| sys.is_minuscule_weight(i).unwrap_or(false))
            .collect(),
    };
    let mut instances = 0usize;
    for &a in &nodes {
        for w in minuscule_elements(&sys, a)? {
            let word = w.reduced_word();
            let q = perrin::build_quiver(&sys, &word)?;
            for order in permutations(&q.peaks) {
                instances += 1;
                let d = perrin::construction1(&q, &perrin::PeakOrdering(order))?;
                let rep = perrin::section5_checks(&d)?;
                if !rep.all_ok {
                    return Err(Error::Internal(format!(
                        "structural check failed for {word}"
                    )));
                }
                let (_, _, equal) = perrin::stabilizer_weyl_groups(&d)?;
                if !equal {
                    return Err(Error::Internal(format!(
                        "stabilizers differ for {word}"
                    )));
                }
            }
            // Monotonicity of the gamma sequence for every reduced word.
            for rw in w.all_reduced_words() {
                perrin::gamma_sequence(&sys, &rw)?;
            }
        }
    }
    Ok(json!({ "type": ty, "instances": instances, "failures": 0 }))
}

/// Evaluate an operation by name with JSON arguments. Backs the corpus
/// runner and the C interface; mirrors the CLI subcommands plus a few
/// library calls that have no subcommand of their own.
pub fn eval_op(op: &str, args: &Value) -> Result<Value> {
    let s = |k: &str| -> Result<String> {
        args.get(k)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| Error::Input(format!("missing field `{k}`")))
    };
    let opt = |k: &str| args.get(k).and_then(Value::as_str).map(str::to_string);
    let num = |k: &str| -> Result<usize> {
        args.get(k)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::Input(format!("missing field `{k}`")))
    };
    let cmd = match op {
        "root-system" => Cmd::RootSystem {
            ty: s("type")?,
            levi: opt("levi"),
        },
        "weyl" => Cmd::Weyl {
            ty: s("type")?,
            word: s("word")?,
            levi: opt("levi"),
        },
        "curves" => Cmd::Curves {
            ty: s("type")?,
            levi: s("levi")?,
            word: s("word")?,
        },
        "lines" => Cmd::Lines {
            ty: s("type")?,
            node: num("node")?,
        },
        "smooth" => Cmd::Smooth {
            ty: s("type")?,
            node: num("node")?,
            word: s("word")?,
        },
        "bs" => Cmd::Bs {
            ty: s("type")?,
            levi: opt("levi"),
            word: s("word")?,
        },
        "quiver" => Cmd::Quiver {
            ty: s("type")?,
            word: s("word")?,
        },
        "decompose" => Cmd::Decompose {
            ty: s("type")?,
            word: s("word")?,
            peak_order: opt("peak-order").unwrap_or_else(|| "standard".into()),
        },
        "check5" => Cmd::Check5 {
            ty: s("type")?,
            word: s("word")?,
            peak_order: opt("peak-order").unwrap_or_else(|| "standard".into()),
        },
        "families" => Cmd::Families {
            ty: s("type")?,
            blocks: opt("blocks"),
            word: opt("word"),
            peak_order: opt("peak-order").unwrap_or_else(|| "standard".into()),
        },
        "schubert-families" => {
            let sys = RootSystem::parse(&s("type")?)?;
            let space = FlagSpace::new(&sys, parse_levi(&s("levi")?, sys.rank())?)?;
            let (e, _, reduced) = element(&sys, &s("word")?)?;
            if !reduced {
                return Err(Error::NotReduced);
            }
            let x = SchubertVariety::new(space, e)?;
            let fams = schubert::line_families_on_schubert(&x)?;
            return Ok(json!({
                "families": fams.iter().map(|f| json!({
                    "v": f.v.reduced_word().to_string(),
                    "dimension": f.dimension,
                })).collect::<Vec<_>>(),
            }));
        }
        "gamma" => {
            let sys = RootSystem::parse(&s("type")?)?;
            let word = Word::parse(&s("word")?, sys.rank())?;
            let gammas = perrin::gamma_sequence(&sys, &word)?;
            return Ok(json!({
                "gamma": gammas.iter().map(root_json).collect::<Vec<_>>(),
            }));
        }
        other => return Err(Error::Input(format!("unknown corpus op `{other}`"))),
    };
    run_cmd(&cmd)
}

fn print_table(value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) if !is_flat(v) => {
                        println!("{pad}{k}:");
                        print_table(v, indent + 1);
                    }
                    _ => println!("{pad}{k}: {}", flat(v)),
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                if is_flat(v) {
                    println!("{pad}- {}", flat(v));
                } else {
                    println!("{pad}- [{i}]");
                    print_table(v, indent + 1);
                }
            }
        }
        other => println!("{pad}{}", flat(other)),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn exit_for(err: &Error) -> i32 {
    match err {
        Error::Internal(_) | Error::EnumerationCap(_) => 1,
        _ => 2,
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_cmd(&cli.cmd) {
        Ok(value) => {
            if cli.table {
                print_table(&value, 0);
            } else {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            }
            // The corpus runner reports failures in-band; reflect them in the
            // exit status.
            if value.get("failed").and_then(Value::as_u64).unwrap_or(0) > 0 {
                1
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}
