use powerdom::construct::construct_general;
use powerdom::exact::{gamma_p_exact, SearchLimits};
use powerdom::graph::io::{parse_edge_list, write_edge_list};
use powerdom::graph::{generate, Family};
use powerdom::observe::{verify_certificate, CertificateError, Model, PdsCertificate};

#[test]
fn certificate_survives_a_file_round_trip() {
    let g = generate(&Family::RandomBridgedCfdf { parts: 4, seed: 9 }).unwrap();
    let g = parse_edge_list(&write_edge_list(&g)).unwrap();
    let c = construct_general(&g).unwrap();
    let back = PdsCertificate::from_json(&c.certificate.to_json()).unwrap();
    assert_eq!(back, c.certificate);
    verify_certificate(&back, &g).unwrap();
}

#[test]
fn certificate_rejects_another_graph() {
    let g = generate(&Family::Figure1).unwrap();
    let c = construct_general(&g).unwrap();
    let other = generate(&Family::RandomCfdf { n: 4, seed: 1 }).unwrap();
    assert!(matches!(verify_certificate(&c.certificate, &other), Err(CertificateError::Fingerprint { .. })));
}

#[test]
fn construction_never_beats_the_optimum() {
    for seed in 0..5 {
        let g = generate(&Family::RandomCfdf { n: 6, seed }).unwrap();
        let c = construct_general(&g).unwrap();
        let best = gamma_p_exact(&g, Model::Vertex, &SearchLimits::default()).unwrap();
        assert!(best.value <= c.set().len());
    }
}
