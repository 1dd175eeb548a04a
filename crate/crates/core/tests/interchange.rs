//! Round-trip checks for the on-disk interchange formats: group files,
//! tabulated-family files, W-graph files, and the CSV matrix export.

use almost_fourier::families::{datum, golden_matrix, FamilyId, ALL_FAMILIES};
use almost_fourier::groups::{character_table, FiniteGroup, GroupFile};
use almost_fourier::hecke::{self, GraphKind, WGraphFile};
use almost_fourier::pairing::{tabulated_gram, TabulatedFile};
use almost_fourier::Scalar;

#[test]
fn group_files_round_trip() {
    let groups = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(4),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion8(),
    ];
    for g in groups {
        let chars = character_table(&g).expect("characters exist");
        let file = GroupFile::from_group(&g, &chars);
        let json = serde_json::to_string_pretty(&file).expect("serializes");
        let parsed: GroupFile = serde_json::from_str(&json).expect("parses");
        let (g2, chars2) = parsed.into_group().expect("valid group");
        assert_eq!(g.order(), g2.order());
        for a in 0..g.order() {
            assert_eq!(g.name(a), g2.name(a));
            for b in 0..g.order() {
                assert_eq!(g.mul(a, b), g2.mul(a, b));
            }
        }
        assert_eq!(chars, chars2);
    }
}

#[test]
fn group_file_rejects_broken_table() {
    // Damage associativity: in Z/3, force 2 * 2 = 2.
    let g = FiniteGroup::cyclic(3);
    let chars = character_table(&g).expect("characters exist");
    let mut file = GroupFile::from_group(&g, &chars);
    file.table[8] = 2;
    assert!(file.into_group().is_err());
}

#[test]
fn tabulated_files_round_trip() {
    for id in ALL_FAMILIES {
        let d = datum(id);
        let file = TabulatedFile::from_datum(&d);
        let json = serde_json::to_string_pretty(&file).expect("serializes");
        let parsed: TabulatedFile = serde_json::from_str(&json).expect("parses");
        let d2 = parsed.into_datum().expect("valid datum");
        let g1 = tabulated_gram(&d, "1").expect("gram builds");
        let g2 = tabulated_gram(&d2, "1").expect("gram builds");
        assert_eq!(g1.labels, g2.labels);
        assert_eq!(g1.gram, g2.gram);
    }
}

#[test]
fn wgraph_files_round_trip() {
    let cases = [
        (GraphKind::A, None),
        (GraphKind::B, None),
        (GraphKind::C, None),
        (GraphKind::D, Some(Scalar::from_ratio(3, 2))),
    ];
    for (kind, lambda) in cases {
        let g = hecke::wgraph(kind, 3, lambda).expect("graph builds");
        let file = WGraphFile::from_graph(&g);
        let json = serde_json::to_string_pretty(&file).expect("serializes");
        let parsed: WGraphFile = serde_json::from_str(&json).expect("parses");
        let g2 = parsed.into_graph().expect("valid graph");
        assert_eq!(g.n, g2.n);
        assert_eq!(g.vertices, g2.vertices);
        assert_eq!(g.marks, g2.marks);
        assert_eq!(g.weights, g2.weights);
        // The round-tripped graph still generates a valid module.
        hecke::module(&g2).expect("relations hold");
    }
}

/// Minimal RFC 4180 field splitter (quotes around fields with commas).
fn split_csv(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted && chars.peek() == Some(&'"') => {
                cur.push('"');
                chars.next();
            }
            '"' => quoted = !quoted,
            ',' if !quoted => fields.push(std::mem::take(&mut cur)),
            other => cur.push(other),
        }
    }
    fields.push(cur);
    fields
}

#[test]
fn csv_export_reproduces_the_matrix() {
    for id in [FamilyId::F15RsqOne, FamilyId::F112] {
        let gs = tabulated_gram(&datum(id), "1").expect("gram builds");
        let csv = gs.to_csv();
        let mut lines = csv.lines();
        let header = split_csv(lines.next().expect("header"));
        assert_eq!(&header[1..], gs.labels.as_slice());
        let golden = golden_matrix(id);
        for (i, line) in lines.enumerate() {
            let fields = split_csv(line);
            assert_eq!(fields[0], gs.labels[i]);
            for (j, field) in fields[1..].iter().enumerate() {
                let value: Scalar = field.parse().expect("scalar string");
                assert_eq!(&value, golden.at(i, j), "entry ({i}, {j})");
            }
        }
    }
}
