macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(graph_io, "graph_io.rs");
example!(connectivity, "connectivity.rs");
example!(factors, "factors.rs");
example!(orientations, "orientations.rs");
example!(decompositions, "decompositions.rs");
example!(bipartite_gf, "bipartite_gf.rs");
example!(bi_large, "bi_large.rs");
example!(tree_connected, "tree_connected.rs");
example!(verify_campaign, "verify_campaign.rs");

#[test]
fn graph_io_example_runs() {
    graph_io::run_example().expect("graph_io example");
}

#[test]
fn connectivity_example_runs() {
    connectivity::run_example().expect("connectivity example");
}

#[test]
fn factors_example_runs() {
    factors::run_example().expect("factors example");
}

#[test]
fn orientations_example_runs() {
    orientations::run_example().expect("orientations example");
}

#[test]
fn decompositions_example_runs() {
    decompositions::run_example().expect("decompositions example");
}

#[test]
fn bipartite_gf_example_runs() {
    bipartite_gf::run_example().expect("bipartite_gf example");
}

#[test]
fn bi_large_example_runs() {
    bi_large::run_example().expect("bi_large example");
}

#[test]
fn tree_connected_example_runs() {
    tree_connected::run_example().expect("tree_connected example");
}

#[test]
fn verify_campaign_example_runs() {
    verify_campaign::run_example().expect("verify_campaign example");
}
