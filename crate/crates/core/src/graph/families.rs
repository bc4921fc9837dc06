//! Named graphs used as fixtures throughout the crate and the CLI.

use super::Graph;

fn named(names: &[&str], edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::with_names(names.iter().map(|s| s.to_string()).collect());
    for &(u, v) in edges {
        g.add_edge(u, v).expect("fixture graphs are simple");
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Cycle on `n >= 3` vertices with edges `i -- i+1` and `n-1 -- 0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i).unwrap();
    }
    g
}

/// `K_{1,k}` with the centre at vertex 0.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::new(k + 1);
    for i in 1..=k {
        g.add_edge(0, i).unwrap();
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    g
}

/// `K4` minus the edge `cd`.
pub fn diamond() -> Graph {
    named(&["a", "b", "c", "d"], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Hubs `a`, `b` joined by the three paths `a-x-b`, `a-y-b`, `a-z-b`.
pub fn theta() -> Graph {
    named(
        &["a", "b", "x", "y", "z"],
        &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)],
    )
}

/// Triangles `abc` and `cde` sharing `c`.
pub fn bowtie() -> Graph {
    named(
        &["a", "b", "c", "d", "e"],
        &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)],
    )
}

/// Triangle `abc` with the pendant edge `cd`.
pub fn triangle_pendant() -> Graph {
    named(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (0, 2), (2, 3)])
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    named(
        &["a", "b", "c", "d", "e", "f"],
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
}

/// The named test set: C3, C4, C5, P3, K4, diamond, theta, bowtie and
/// triangle+pendant.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("P3", path(3)),
        ("K4", complete(4)),
        ("diamond", diamond()),
        ("theta", theta()),
        ("bowtie", bowtie()),
        ("triangle+pendant", triangle_pendant()),
    ]
}

/// Looks up a fixture by name, for the CLI and test tables.
pub fn by_name(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    let g = match lower.as_str() {
        "diamond" => diamond(),
        "theta" => theta(),
        "bowtie" => bowtie(),
        "triangle_pendant" | "triangle+pendant" => triangle_pendant(),
        "petersen" => petersen(),
        "prism" => prism(),
        _ => {
            let (kind, num) = lower.split_at(1);
            if let Some(rest) = num.strip_prefix("1,") {
                let k: usize = rest.parse().ok()?;
                return (kind == "k").then(|| star(k));
            }
            let k: usize = num.parse().ok()?;
            match kind {
                "k" if k >= 1 => complete(k),
                "c" if k >= 3 => cycle(k),
                "p" if k >= 1 => path(k),
                _ => return None,
            }
        }
    };
    Some(g)
}
