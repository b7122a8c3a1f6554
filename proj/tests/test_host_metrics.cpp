#include <doctest.h>

#include "harm/host_metrics.hpp"
#include "harm/model.hpp"

using namespace harm;

namespace {

AttackTreeNode leaf(double prob, double impact, double cost, double base_score = 5.0) {
    return AttackTreeNode::leaf(Vulnerability{"CVE-T", base_score, prob, impact, cost});
}

AttackTreeNode and_gate(std::vector<AttackTreeNode> children) {
    return AttackTreeNode::gate(AttackTreeNode::Gate::And, std::move(children));
}

AttackTreeNode or_gate(std::vector<AttackTreeNode> children) {
    return AttackTreeNode::gate(AttackTreeNode::Gate::Or, std::move(children));
}

}  // namespace

TEST_CASE("fold_impact: leaf value, AND sums, OR takes the max") {
    CHECK(fold_impact(leaf(0.44, 4.3, 5.5)) == doctest::Approx(4.3));
    CHECK(fold_impact(and_gate({leaf(1, 3, 1), leaf(1, 5, 1)})) == doctest::Approx(8.0));
    CHECK(fold_impact(or_gate({leaf(1, 3, 1), leaf(1, 5, 1)})) == doctest::Approx(5.0));
}

TEST_CASE("fold_prob: leaf value, AND multiplies, OR complements") {
    CHECK(fold_prob(leaf(0.44, 1, 1)) == doctest::Approx(0.44));
    CHECK(fold_prob(and_gate({leaf(0.5, 1, 1), leaf(0.5, 1, 1)})) == doctest::Approx(0.25));
    CHECK(fold_prob(or_gate({leaf(0.5, 1, 1), leaf(0.5, 1, 1)})) == doctest::Approx(0.75));
}

TEST_CASE("fold_risk: leaf prob*impact, AND sums, OR takes the max") {
    CHECK(fold_risk(leaf(0.93, 9, 1)) == doctest::Approx(8.37));
    CHECK(fold_risk(and_gate({leaf(0.5, 2, 1), leaf(0.5, 4, 1)})) == doctest::Approx(3.0));
    CHECK(fold_risk(or_gate({leaf(0.5, 2, 1), leaf(0.5, 4, 1)})) == doctest::Approx(2.0));
}

TEST_CASE("fold_roa: leaf prob*impact/cost, AND sums, OR takes the max") {
    CHECK(fold_roa(leaf(0.35, 4, 4.2)) == doctest::Approx(0.35 * 4 / 4.2).epsilon(1e-12));
    CHECK(fold_roa(leaf(0.35, 4, 4.2)) == doctest::Approx(0.3333).epsilon(1e-3));
    CHECK(fold_roa(and_gate({leaf(1, 1, 1), leaf(1, 2, 2)})) == doctest::Approx(2.0));
    CHECK(fold_roa(or_gate({leaf(1, 1, 1), leaf(1, 2, 2)})) == doctest::Approx(1.0));
}

TEST_CASE("fold_roa rejects non-positive leaf cost, naming the leaf") {
    AttackTreeNode bad = AttackTreeNode::leaf(Vulnerability{"CVE-BAD", 5.0, 0.5, 1.0, 0.0});
    try {
        fold_roa(bad);
        FAIL("expected domain_error");
    } catch (const std::domain_error& error) {
        CHECK(std::string(error.what()).find("CVE-BAD") != std::string::npos);
    }
}

TEST_CASE("fold_cost: leaf value, AND sums, OR takes the cheapest branch") {
    CHECK(fold_cost(leaf(1, 1, 5.5)) == doctest::Approx(5.5));
    CHECK(fold_cost(and_gate({leaf(1, 1, 2), leaf(1, 1, 3)})) == doctest::Approx(5.0));
    CHECK(fold_cost(or_gate({leaf(1, 1, 2), leaf(1, 1, 3)})) == doctest::Approx(2.0));
}

TEST_CASE("host_metrics bundles the folds for the fixture hosts") {
    NetworkModel m = example_network_model();

    HostMetrics h1 = host_metrics(m.hosts.at("h1"));
    CHECK(h1.prob == doctest::Approx(0.75));
    CHECK(h1.impact == doctest::Approx(7.0));
    CHECK(h1.risk == doctest::Approx(5.25));
    CHECK(h1.roa == doctest::Approx(0.65625));
    CHECK(h1.cost == doctest::Approx(8.0));

    HostMetrics h4 = host_metrics(m.hosts.at("h4"));
    CHECK(h4.prob == doctest::Approx(0.21));
    CHECK(h4.impact == doctest::Approx(3.0));
    CHECK(h4.risk == doctest::Approx(0.63));
    CHECK(h4.roa == doctest::Approx(0.18));
    CHECK(h4.cost == doctest::Approx(3.5));

    // Any single-leaf host reports its leaf probability.
    for (const auto& [id, host] : m.hosts)
        CHECK(host_metrics(host).prob == doctest::Approx(host.attack_tree.vulnerability().prob));
}

TEST_CASE("a patched host folds to zero probability and impact") {
    Host host{"hx", "hx", 10.0, leaf(0.9, 5.0, 2.0), true};
    HostMetrics metrics = host_metrics(host);
    CHECK(metrics.prob == 0.0);
    CHECK(metrics.impact == 0.0);
    CHECK(metrics.risk == 0.0);
    CHECK(metrics.roa == 0.0);
    CHECK(metrics.cost == doctest::Approx(2.0));
}
