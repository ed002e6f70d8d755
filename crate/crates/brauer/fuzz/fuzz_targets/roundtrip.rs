#![no_main]

use libfuzzer_sys::fuzz_target;

// Any document that parses must serialize to a stable canonical form that
// parses back to the same data.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = brauer::parse(text) else { return };
    let out = brauer::serialize(&doc.graph, doc.grading.as_ref());
    let again = brauer::parse(&out).expect("serialized documents parse");
    assert_eq!(again.graph.ground(), doc.graph.ground());
    assert_eq!(again.graph.iota(), doc.graph.iota());
    assert_eq!(again.graph.sigma(), doc.graph.sigma());
    assert_eq!(again.grading, doc.grading);
    let stable = brauer::serialize(&again.graph, again.grading.as_ref());
    assert_eq!(stable, out);
});
