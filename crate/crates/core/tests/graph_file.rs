use factorkit::factors::find_two_point_factor;
use factorkit::graph::{parse_graph_file, GraphError, MultiGraph};
use factorkit::search::Search;

const FIXTURE: &str = include_str!("fixtures/multigraph_7.txt");

/// Degrees recounted from the `e` lines of the text itself.
fn degrees_from_text(text: &str, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for line in text.lines().filter(|l| l.starts_with("e ")) {
        let ends: Vec<usize> = line[2..].split_whitespace().map(|t| t.parse().unwrap()).collect();
        d[ends[0] - 1] += 1;
        d[ends[1] - 1] += 1;
    }
    d
}

#[test]
fn fixture_parses_and_round_trips() {
    let file = parse_graph_file(FIXTURE).unwrap();
    let g = &file.graph;
    let edge_lines = FIXTURE.lines().filter(|l| l.starts_with("e ")).count();
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(g.edge_count(), edge_lines);
    assert_eq!(g.degrees(), degrees_from_text(FIXTURE, 7));

    let text = file.to_text();
    assert_eq!(text.lines().count(), 1 + edge_lines + 7);
    assert!(text.ends_with('\n'));
    let again = parse_graph_file(&text).unwrap();
    assert_eq!(again, file);
    assert_eq!(again.to_text(), text);
}

#[test]
fn fixture_has_a_near_half_factor() {
    let file = parse_graph_file(FIXTURE).unwrap();
    let (lo, hi) = file.gf().unwrap();
    let found = find_two_point_factor(&file.graph, &lo, &hi, None).unwrap();
    match found {
        Search::Found(f) => {
            let d = file.graph.factor_degrees(&f).unwrap();
            assert!((0..7).all(|v| d[v] as i64 == lo[v] || d[v] as i64 == hi[v]));
        }
        other => panic!("expected a factor, got {other:?}"),
    }
}

#[test]
fn malformed_input_names_the_line() {
    let cases = [
        "p multigraph 2 1\ne 1 3\n",
        "p multigraph 2 2\ne 1 2\n",
        "e 1 2\n",
        "p multigraph 2 1\ne 1 x\n",
    ];
    for text in cases {
        let err = MultiGraph::parse(text).unwrap_err();
        assert!(!err.to_string().is_empty(), "{text:?}");
    }
    assert!(matches!(
        MultiGraph::parse("p multigraph 2 1\ne 1 3\n"),
        Err(GraphError::Parse { line: 2, .. })
    ));
}
