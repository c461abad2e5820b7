//! The checked-in graph files must be exactly what the fixtures build.

use std::path::Path;

use qdeg::fixtures::graph_fixture;
use qdeg::io::GraphFile;

const FILES: [&str; 5] = ["rejected-31", "fixed-point", "cover-classes", "cover-lift", "union-31"];

#[test]
fn files_match_constructions() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in FILES {
        let file = GraphFile::read(&dir.join(format!("{name}.json"))).unwrap();
        let built = GraphFile::from_graph(&graph_fixture(name).unwrap());
        assert_eq!(file, built, "{name}");
    }
}

#[test]
fn graph_files_round_trip() {
    for name in FILES {
        let g = graph_fixture(name).unwrap();
        let file = GraphFile::from_graph(&g);
        let text = file.to_json();
        let back: GraphFile = serde_json::from_str(&text).unwrap();
        let h = back.to_graph(false).unwrap();
        assert_eq!(h.labels(), g.labels(), "{name}");
        assert_eq!(h.ids(), g.ids(), "{name}");
        assert_eq!(h.edge_count(), g.edge_count(), "{name}");
        assert_eq!(GraphFile::from_graph(&h), file, "{name}");
    }
}
