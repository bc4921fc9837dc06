use super::Graph;

/// Cartesian product. Vertex `(a, b)` has id `a * n2 + b` and is named
/// `(name_a,name_b)`. Edges along the second factor come first.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.vertex_count();
    let mut names = Vec::with_capacity(g1.vertex_count() * n2);
    for a in g1.vertices() {
        for b in g2.vertices() {
            names.push(format!("({},{})", g1.name(a), g2.name(b)));
        }
    }
    let mut g = Graph::with_names(names);
    for a in g1.vertices() {
        for &(u, v) in g2.edges() {
            g.add_edge(a * n2 + u, a * n2 + v).unwrap();
        }
    }
    for b in g2.vertices() {
        for &(u, v) in g1.edges() {
            g.add_edge(u * n2 + b, v * n2 + b).unwrap();
        }
    }
    g
}

/// Left-folded product of all factors; the empty product is `K1`.
pub fn cartesian_product_all(factors: &[Graph]) -> Graph {
    match factors.split_first() {
        None => Graph::new(1),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, f| cartesian_product(&acc, f)),
    }
}
