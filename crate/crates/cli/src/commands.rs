use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use stag_core::factor::{prime_factorize, DEFAULT_FACTOR_LIMIT};
use stag_core::generate::{random_connected, random_two_connected, rng};
use stag_core::graph::{are_isomorphic, block_decomposition, parse_graph, Format, Graph, DEFAULT_ISO_LIMIT};
use stag_core::params::report_for;
use stag_core::recognition::{enumerate_preimages, Verdict};
use stag_core::strategy::Registry;

use crate::{Command, FormatArg, Opts, Outcome, Status};

pub fn run(cmd: &Command, opts: &Opts) -> Result<Outcome> {
    let reg = Registry::new(opts.oracle);
    let strategy = opts.strategy.as_deref();
    match cmd {
        Command::Aux => {
            let g = read_input(opts)?;
            let s = reg.builder(strategy)?.build(&g, opts.max_trees)?;
            let text = match output_format(opts, FormatArg::Json)? {
                FormatArg::Json => s.to_json(),
                FormatArg::Dot => s.to_dot(),
                FormatArg::Edgelist => s.graph().to_edge_list(),
            };
            let detail = json!({ "vertices": s.vertex_count(), "edges": s.graph().edge_count() });
            emit(opts, text, detail)
        }
        Command::Count => {
            let g = read_input(opts)?;
            let count = reg.counter(strategy)?.count(&g)?;
            emit(opts, format!("{count}\n"), json!({ "count": count.to_string() }))
        }
        Command::Trees => {
            let g = read_input(opts)?;
            let trees = reg.enumerator(strategy)?.enumerate(&g, opts.max_trees)?;
            let text: String = trees.iter().map(|t| format!("{t}\n")).collect();
            emit(opts, text, json!({ "count": trees.len() }))
        }
        Command::Blocks => {
            let g = read_input(opts)?;
            let dec = block_decomposition(&g)?;
            let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_string()).collect::<Vec<_>>();
            let blocks: Vec<Value> = dec
                .blocks
                .iter()
                .map(|b| json!({ "vertices": names(&b.vertices), "edges": b.edges, "bridge": b.is_bridge() }))
                .collect();
            let tree: Vec<Value> = dec
                .block_cut_tree
                .iter()
                .map(|&(b, v)| json!([b, g.name(v)]))
                .collect();
            let doc = json!({ "blocks": blocks, "cut_vertices": names(&dec.cut_vertices), "block_cut_tree": tree });
            let text = match output_format(opts, FormatArg::Edgelist)? {
                FormatArg::Json => serde_json::to_string_pretty(&doc)? + "\n",
                _ => {
                    let mut out = String::new();
                    for (i, b) in dec.blocks.iter().enumerate() {
                        out += &format!("block {i}: {}\n", names(&b.vertices).join(" "));
                    }
                    out += &format!("cut vertices: {}\n", names(&dec.cut_vertices).join(" "));
                    out
                }
            };
            emit(opts, text, json!({ "blocks": dec.blocks.len(), "cut_vertices": dec.cut_vertices.len() }))
        }
        Command::Factor => factor(opts),
        Command::Invert => invert(opts, &reg),
        Command::Preimages { budget } => {
            let g = read_input(opts)?;
            let all = enumerate_preimages(&g, *budget)?;
            match &opts.output {
                Some(out) => {
                    let (dir, stem) = split_output(out)?;
                    let mut outputs = Vec::new();
                    for (i, p) in all.iter().enumerate() {
                        outputs.push(write(&dir.join(format!("{stem}_{i}.txt")), &p.to_edge_list())?);
                    }
                    Ok(Outcome {
                        outputs,
                        ..Outcome::ok(String::new(), json!({ "count": all.len() }))
                    })
                }
                None => {
                    let text = all.iter().map(Graph::to_edge_list).collect::<Vec<_>>().join("\n");
                    Ok(Outcome::ok(text, json!({ "count": all.len() })))
                }
            }
        }
        Command::Params => {
            let g = read_input(opts)?;
            let s = reg.builder(strategy)?.build(&g, opts.max_trees)?;
            let report = report_for(&g, &s, opts.max_n)?;
            let text = match output_format(opts, FormatArg::Edgelist)? {
                FormatArg::Json => report.to_json(),
                _ => report.to_table(),
            };
            let mut out = emit(opts, text, serde_json::to_value(&report)?)?;
            if !report.all_hold() {
                out.status = Status::Violated;
            }
            Ok(out)
        }
        Command::VerifyRoundtrip => {
            let g = read_input(opts)?;
            let builder = reg.builder(None)?;
            let aux = builder.build(&g, opts.max_trees)?;
            let inv = reg.recognizer(strategy)?.recognize(aux.graph())?;
            let again = builder.build(&inv.graph, opts.max_trees)?;
            let same = are_isomorphic(again.graph(), aux.graph(), DEFAULT_ISO_LIMIT)?;
            let detail = json!({
                "aux_vertices": aux.vertex_count(),
                "preimage": { "n": inv.graph.vertex_count(), "m": inv.graph.edge_count() },
                "factors": inv.factor_sizes,
                "isomorphic": same,
            });
            let text = format!(
                "aux: {} vertices; preimage n={} m={}; round trip {}\n",
                aux.vertex_count(),
                inv.graph.vertex_count(),
                inv.graph.edge_count(),
                if same { "ok" } else { "FAILED" }
            );
            let mut out = Outcome::ok(text, detail);
            if !same {
                out.status = Status::Violated;
            }
            Ok(out)
        }
        Command::Random { n, m, two_connected } => {
            let mut r = rng(opts.seed);
            let g = if *two_connected {
                random_two_connected(*n, *m, &mut r)?
            } else {
                random_connected(*n, *m, &mut r)?
            };
            let text = graph_text(&g, output_format(opts, FormatArg::Edgelist)?);
            emit(opts, text, json!({ "n": n, "m": m, "seed": opts.seed }))
        }
        Command::Strategies => {
            let mut text = String::new();
            for (family, names) in Registry::catalogue() {
                text += &format!("{family}: {} (oracle: {})\n", names.join(", "), names[1]);
            }
            Ok(Outcome::ok(text, json!(Registry::catalogue())))
        }
    }
}

fn factor(opts: &Opts) -> Result<Outcome> {
    let h = read_input(opts)?;
    let f = prime_factorize(&h, DEFAULT_FACTOR_LIMIT)?;
    let sizes: Vec<(usize, usize)> = f.factors.iter().map(|x| (x.vertex_count(), x.edge_count())).collect();
    let detail = json!({ "prime": f.is_prime(), "factors": sizes });
    match &opts.output {
        Some(out) => {
            let (dir, stem) = split_output(out)?;
            let mut outputs = Vec::new();
            for (i, x) in f.factors.iter().enumerate() {
                outputs.push(write(&dir.join(format!("{stem}_factor{i}.txt")), &x.to_edge_list())?);
            }
            outputs.push(write(&dir.join(format!("{stem}_coords.json")), &f.coordinates_json(&h))?);
            Ok(Outcome {
                outputs,
                ..Outcome::ok(String::new(), detail)
            })
        }
        None => {
            let mut text = format!("{} prime factor(s)\n", f.factors.len());
            for (i, x) in f.factors.iter().enumerate() {
                text += &format!("# factor {i}: {} vertices, {} edges\n{}", x.vertex_count(), x.edge_count(), x.to_edge_list());
            }
            Ok(Outcome::ok(text, detail))
        }
    }
}

fn invert(opts: &Opts, reg: &Registry) -> Result<Outcome> {
    let h = read_input(opts)?;
    let result = reg.recognizer(opts.strategy.as_deref())?.recognize(&h);
    if let Err(e) = &result {
        if !matches!(e, stag_core::Error::NotAStag(_)) {
            return Err(e.clone().into());
        }
    }
    let verdict = Verdict::from_result(&result);
    let verdict_json = serde_json::to_string_pretty(&verdict)? + "\n";
    let status = if result.is_ok() { Status::Ok } else { Status::NotAStag };
    let detail = serde_json::to_value(&verdict)?;
    match &opts.output {
        Some(out) => {
            let (dir, stem) = split_output(out)?;
            let mut outputs = Vec::new();
            if let Ok(inv) = &result {
                outputs.push(write(&dir.join(format!("{stem}.txt")), &inv.graph.to_edge_list())?);
                outputs.push(write(&dir.join(format!("{stem}.json")), &inv.graph.to_json())?);
            }
            outputs.push(write(&dir.join(format!("{stem}.verdict.json")), &verdict_json)?);
            Ok(Outcome {
                status,
                outputs,
                text: String::new(),
                detail,
            })
        }
        None => {
            let text = match &result {
                Ok(inv) => inv.graph.to_edge_list(),
                Err(e) => format!("not a STAG: {e}\n"),
            };
            Ok(Outcome {
                status,
                outputs: Vec::new(),
                text,
                detail,
            })
        }
    }
}

fn read_input(opts: &Opts) -> Result<Graph> {
    let Some(path) = &opts.input else {
        bail!("this command needs an input graph (-i)");
    };
    let (bytes, ext) = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        (buf, String::new())
    } else {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("").to_string();
        (bytes, ext)
    };
    if ext.eq_ignore_ascii_case("dot") {
        bail!("DOT is an export-only format");
    }
    let format = match (Format::from_extension(&ext), opts.format) {
        (Some(f), _) => f,
        (None, Some(FormatArg::Json)) => Format::Json,
        (None, _) => Format::EdgeList,
    };
    parse_graph(&bytes, format).with_context(|| format!("parsing {}", path.display()))
}

fn output_format(opts: &Opts, default: FormatArg) -> Result<FormatArg> {
    if let Some(f) = opts.format {
        return Ok(f);
    }
    let ext = opts.output.as_deref().and_then(Path::extension).and_then(|e| e.to_str());
    Ok(match ext.map(str::to_ascii_lowercase).as_deref() {
        Some("json") => FormatArg::Json,
        Some("dot") => FormatArg::Dot,
        Some("txt" | "edges" | "el") => FormatArg::Edgelist,
        _ => default,
    })
}

fn graph_text(g: &Graph, format: FormatArg) -> String {
    match format {
        FormatArg::Edgelist => g.to_edge_list(),
        FormatArg::Json => g.to_json(),
        FormatArg::Dot => g.to_dot(),
    }
}

/// Writes `text` to `-o` if given, else returns it for stdout.
fn emit(opts: &Opts, text: String, detail: Value) -> Result<Outcome> {
    match &opts.output {
        Some(path) => {
            let written = write(path, &text)?;
            Ok(Outcome {
                outputs: vec![written],
                ..Outcome::ok(String::new(), detail)
            })
        }
        None => Ok(Outcome::ok(text, detail)),
    }
}

fn write(path: &Path, text: &str) -> Result<PathBuf> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(path.to_path_buf())
}

/// Directory and file stem of `-o`, for commands that write several files.
fn split_output(out: &Path) -> Result<(PathBuf, String)> {
    let stem = out
        .file_stem()
        .and_then(|s| s.to_str())
        .context("output path has no file name")?
        .to_string();
    let dir = out.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok((dir, stem))
}
