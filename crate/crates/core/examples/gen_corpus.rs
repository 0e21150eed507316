//! Regenerates the frozen diagram corpus.
//!
//! cargo run -p tkh-core --example gen_corpus [-- <out-dir>]

use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tkh_core::arrangement::{layered_pair, random_diagram};
use tkh_core::diagram::{braid_closure, from_pd, BraidClosure};
use tkh_core::{apply_r1, parse_diagram, validate_diagram, Chirality, R1Site, TorusDiagram};

fn write(dir: &Path, name: &str, note: &str, d: &TorusDiagram) {
    assert!(validate_diagram(d).is_valid(), "{name} does not validate");
    assert!(d.crossing_count() <= 12, "{name} is too large");
    let text = format!("# {note}\n{}", d.serialize());
    assert_eq!(parse_diagram(&text).unwrap(), d.canonical());
    fs::write(dir.join(format!("{name}.tkh")), text).unwrap();
}

fn main() {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus"));
    let diagrams = out.join("diagrams");
    let pairs = out.join("pairs");
    let perf = out.join("perf");
    for d in [&diagrams, &pairs, &perf] {
        fs::create_dir_all(d).unwrap();
    }

    let disk = |w: &[i32], s: usize| braid_closure(s, w, BraidClosure::Disk).unwrap();
    let annular = |w: &[i32], s: usize| braid_closure(s, w, BraidClosure::Annular).unwrap();
    let kink = |d: &TorusDiagram, site, c| apply_r1(d, site, c).unwrap();

    let mut named: Vec<(&str, &str, TorusDiagram)> = vec![
        ("empty", "empty link", TorusDiagram::empty()),
        (
            "loop_trivial",
            "one trivial circle",
            TorusDiagram::from_loops(&[(0, 0)]),
        ),
        (
            "loop_10",
            "essential (1,0) circle",
            TorusDiagram::from_loops(&[(1, 0)]),
        ),
        (
            "loop_01",
            "essential (0,1) circle",
            TorusDiagram::from_loops(&[(0, 1)]),
        ),
        (
            "loop_11",
            "essential (1,1) circle",
            TorusDiagram::from_loops(&[(1, 1)]),
        ),
        (
            "loop_21",
            "essential (2,1) circle",
            TorusDiagram::from_loops(&[(2, 1)]),
        ),
        (
            "loops_10_x3",
            "three parallel (1,0) circles",
            TorusDiagram::from_loops(&[(1, 0); 3]),
        ),
        (
            "loops_mixed",
            "(1,1) circle beside a trivial circle",
            TorusDiagram::from_loops(&[(1, 1), (0, 0)]),
        ),
        (
            "unknot_kink",
            "planar unknot with one kink",
            from_pd(&[[1, 1, 2, 2]]).unwrap(),
        ),
        (
            "hopf",
            "planar Hopf link",
            from_pd(&[[4, 1, 3, 2], [2, 3, 1, 4]]).unwrap(),
        ),
        (
            "trefoil",
            "planar trefoil",
            from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap(),
        ),
        (
            "figure_eight",
            "planar figure-eight knot",
            from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap(),
        ),
        ("disk_braid_5_1", "planar closure of s1^5", disk(&[1; 5], 2)),
        (
            "disk_braid_3_fig8",
            "planar closure of (s1 s2^-1)^2",
            disk(&[1, -2, 1, -2], 3),
        ),
        ("annular_s1", "annular closure of s1", annular(&[1], 2)),
        (
            "annular_s1_2",
            "annular closure of s1^2",
            annular(&[1, 1], 2),
        ),
        (
            "annular_s1_3",
            "annular closure of s1^3",
            annular(&[1, 1, 1], 2),
        ),
        (
            "annular_s1_s1inv",
            "annular closure of s1 s1^-1",
            annular(&[1, -1], 2),
        ),
        (
            "annular_3_mixed",
            "annular closure of s1 s2^-1 s1 s2^-1",
            annular(&[1, -2, 1, -2], 3),
        ),
        (
            "annular_3_positive",
            "annular closure of (s1 s2)^3",
            annular(&[1, 2, 1, 2, 1, 2], 3),
        ),
        (
            "annular_4_s1s2s3",
            "annular closure of s1 s2 s3 s1",
            annular(&[1, 2, 3, 1], 4),
        ),
    ];
    let kink10 = parse_diagram("crossings 1\nedge 0.1 0.2 w 0 0\nedge 0.3 0.0 w 1 0\n").unwrap();
    named.push((
        "kink_10",
        "(1,0) circle with a negative kink",
        kink10.clone(),
    ));
    named.push((
        "kink_10_twice",
        "(1,0) circle with two kinks",
        kink(&kink10, R1Site::Edge(0), Chirality::Positive),
    ));
    named.push((
        "kink_11_positive",
        "(1,1) circle with a positive kink",
        kink(
            &TorusDiagram::from_loops(&[(1, 1)]),
            R1Site::Loop(0),
            Chirality::Positive,
        ),
    ));
    named.push((
        "meridian_longitude",
        "(1,0) curve over a (0,1) curve",
        parse_diagram("crossings 1\nedge 0.2 0.0 w 1 0\nedge 0.3 0.1 w 0 1\n").unwrap(),
    ));
    for (name, note, d) in &named {
        write(&diagrams, name, note, d);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let mut count = 0;
    for target in [2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8] {
        let d = random_diagram(&mut rng, target..=target);
        count += 1;
        write(
            &diagrams,
            &format!("random_{count:02}_{target}x"),
            "random curves on the torus",
            &d,
        );
    }

    // Equivalent pairs: independent layered realizations of one class
    // sequence, plus braid relations under annular closure.
    let sequences: [&[(i64, i64)]; 7] = [
        &[(1, 0), (0, 1)],
        &[(1, 0), (0, 1), (1, 0)],
        &[(0, 0), (1, 0), (0, 0)],
        &[(1, 1), (1, -1)],
        &[(0, 1), (0, 0), (0, 1)],
        &[(1, 0), (1, 1), (0, 1)],
        &[(2, 1), (0, 0), (1, 0)],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut index = 0;
    for seq in sequences {
        let (a, b) = loop {
            let (a, b) = layered_pair(&mut rng, seq, 8);
            if a.serialize() != b.serialize() && a.crossing_count() + b.crossing_count() > 0 {
                break (a, b);
            }
        };
        index += 1;
        let note = format!("layered curves of classes {seq:?}, bottom to top");
        write(&pairs, &format!("pair_{index:02}_a"), &note, &a);
        write(&pairs, &format!("pair_{index:02}_b"), &note, &b);
    }
    let braid_pairs: [(&str, usize, &[i32], &[i32]); 3] = [
        (
            "braid relation s1 s2 s1 = s2 s1 s2",
            3,
            &[1, 2, 1],
            &[2, 1, 2],
        ),
        (
            "braid relation s1 s2^-1 s1^-1 = s2^-1 s1^-1 s2",
            3,
            &[1, -2, -1, 2],
            &[-2, -1, 2, 1],
        ),
        ("cancellation s1 s1^-1 s2 = s2", 3, &[1, -1, 2], &[2]),
    ];
    for (note, strands, x, y) in braid_pairs {
        index += 1;
        write(
            &pairs,
            &format!("pair_{index:02}_a"),
            &format!("annular closure, {note}"),
            &annular(x, strands),
        );
        write(
            &pairs,
            &format!("pair_{index:02}_b"),
            &format!("annular closure, {note}"),
            &annular(y, strands),
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    write(
        &perf,
        "random_12x",
        "random curves on the torus, 12 crossings",
        &random_diagram(&mut rng, 12..=12),
    );
    write(
        &perf,
        "annular_3_12x",
        "annular closure of (s1 s2^-1)^6",
        &annular(&[1, -2].repeat(6), 3),
    );
    println!("wrote corpus to {}", out.display());
}
