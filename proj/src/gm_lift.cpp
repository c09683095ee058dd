#include "cpi/gm_lift.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cpi {

namespace {

bool uses_lattice(const IdentityPreset& preset) { return preset.name == "mod5" || preset.name == "mod11"; }
bool uses_kim(const IdentityPreset& preset) { return preset.name == "mod7" || preset.name == "mod3"; }

} // namespace

Int star_weight(const IdentityPreset& preset, const StarElement& x)
{
    const auto& system = x.side == StarSide::U ? preset.S_system : preset.T_system;
    require(static_cast<int>(x.partitions.size()) == preset.S_system.t(), "star element must carry t partitions");
    Int w = x.side == StarSide::U ? u_value(preset, x.payload) : v_value(preset, x.payload);
    for (int i = 1; i <= system.t(); ++i)
        w = checked_add(w, checked_mul(system.modulus(i), x.partitions[static_cast<std::size_t>(i - 1)].weight()));
    return w;
}

StarElement star_from_S(const SolutionTuple& tuple)
{
    return {tuple.nus, {UVElement::Kind::lattice, tuple.ds, 0}, StarSide::U};
}

StarElement star_from_T(const SolutionTuple& tuple)
{
    return {tuple.nus, {UVElement::Kind::lattice, tuple.ds, 0}, StarSide::V};
}

SolutionTuple tuple_of(const StarElement& x)
{
    require(x.payload.kind == UVElement::Kind::lattice, "only lattice payloads correspond to tuples");
    return {x.partitions, x.payload.coords};
}

StarElement f_star(const IdentityPreset& preset, const StarElement& x)
{
    if (x.side == StarSide::U)
        return {x.partitions, uv_bijection(preset, x.payload), StarSide::V};
    return {x.partitions, uv_inverse(preset, x.payload), StarSide::U};
}

void apply_g(const IdentityPreset& preset, StarElement& x)
{
    (void)preset;
    require(x.payload.kind == UVElement::Kind::pentagonal, "g is defined on pentagonal payloads only");
    require(x.payload.coords.size() == x.partitions.size(), "f-tuple length must equal t");
    for (std::size_t i = 0; i < x.partitions.size(); ++i) {
        const Int f = x.payload.coords[i];
        const Int n = checked_add(x.partitions[i].weight(), generalized_pentagonal(f));
        if (n <= 0)
            continue;
        auto image = pentagonal_involution(n, x.partitions[i], f);
        x.partitions[i] = std::move(image.mu);
        x.payload.coords[i] = image.f;
        x.side = x.side == StarSide::U ? StarSide::V : StarSide::U;
        ensure(x.partitions[i].weight() + generalized_pentagonal(image.f) == n, "g preserves the level n_i");
        return;
    }
    throw std::invalid_argument("cpi: g undefined when every level n_i is zero");
}

StarElement g_map(const IdentityPreset& preset, const StarElement& x)
{
    StarElement out = x;
    apply_g(preset, out);
    return out;
}

PathFollower::PathFollower(const IdentityPreset& preset) : preset_(&preset) {}

void PathFollower::step_f()
{
    auto& memo = work_.side == StarSide::U ? to_v_ : to_u_;
    auto it = memo.find(work_.payload);
    if (it == memo.end()) {
        auto image = work_.side == StarSide::U ? uv_bijection(*preset_, work_.payload)
                                               : uv_inverse(*preset_, work_.payload);
        it = memo.emplace(work_.payload, std::move(image)).first;
    }
    work_.payload = it->second;
    work_.side = work_.side == StarSide::U ? StarSide::V : StarSide::U;
}

void PathFollower::step_g() { apply_g(*preset_, work_); }

void PathFollower::record()
{
    for (std::size_t i = 0; i < len_; ++i)
        if (trail_[i] == work_)
            throw std::logic_error("cpi: invariant violated: path revisits a vertex");
    if (len_ < trail_.size())
        trail_[len_] = work_;
    else
        trail_.push_back(work_);
    ++len_;
}

const StarElement& PathFollower::run()
{
    const bool from_S = work_.in_S();
    require(from_S || work_.in_T(), "paths start at an element of S_N or T_N");
    len_ = 0;
    record();
    step_f();
    record();
    while (!(from_S ? work_.in_T() : work_.in_S())) {
        ensure(!work_.in_S() && !work_.in_T(), "path cannot return to its own endpoint set");
        step_g();
        record();
        step_f();
        record();
    }
    return work_;
}

const StarElement& PathFollower::walk(const StarElement& start)
{
    work_ = start;
    return run();
}

namespace {

void load(StarElement& x, const SolutionTuple& tuple, StarSide side)
{
    x.partitions = tuple.nus;
    x.payload.kind = UVElement::Kind::lattice;
    x.payload.coords = tuple.ds;
    x.payload.copy = 0;
    x.side = side;
}

} // namespace

const StarElement& PathFollower::walk_S(const SolutionTuple& s_tuple)
{
    load(work_, s_tuple, StarSide::U);
    return run();
}

const StarElement& PathFollower::walk_T(const SolutionTuple& t_tuple)
{
    load(work_, t_tuple, StarSide::V);
    return run();
}

const StarElement& PathFollower::walk_back()
{
    require(len_ > 0, "walk_back needs a previous walk");
    return run();
}

SolutionTuple PathFollower::forward(const SolutionTuple& s_tuple, std::vector<StarElement>* path)
{
    auto out = tuple_of(walk_S(s_tuple));
    if (path)
        path->assign(trail().begin(), trail().end());
    return out;
}

SolutionTuple PathFollower::backward(const SolutionTuple& t_tuple, std::vector<StarElement>* path)
{
    auto out = tuple_of(walk_T(t_tuple));
    if (path)
        path->assign(trail().begin(), trail().end());
    return out;
}

StarElement follow_path(const IdentityPreset& preset, const StarElement& start, std::vector<StarElement>* path)
{
    PathFollower follower(preset);
    auto out = follower.walk(start);
    if (path)
        path->assign(follower.trail().begin(), follower.trail().end());
    return out;
}

SolutionTuple lift_forward(const IdentityPreset& preset, const SolutionTuple& s_tuple, std::vector<StarElement>* path)
{
    return PathFollower(preset).forward(s_tuple, path);
}

SolutionTuple lift_backward(const IdentityPreset& preset, const SolutionTuple& t_tuple, std::vector<StarElement>* path)
{
    return PathFollower(preset).backward(t_tuple, path);
}

namespace {

PartitionCatalog catalog_for(const ResidueSystem& system, Int N)
{
    const Int min_c = *std::min_element(system.moduli().begin(), system.moduli().end());
    return PartitionCatalog(std::max<Int>(N, 0) / min_c);
}

} // namespace

LiftTable lift(const IdentityPreset& preset, Int N)
{
    require(uses_lattice(preset), "lift is defined for mod5 and mod11");
    require(N >= preset.N0, "lift needs N >= N0");
    LiftTable table;
    table.N = N;
    PathFollower follower(preset);
    std::vector<StarElement> path;
    for_each_solution(preset.S_system, N, catalog_for(preset.S_system, N), [&](const SolutionTuple& s) {
        auto image = follower.forward(s, &path);
        table.longest_path = std::max(table.longest_path, path.size());
        ensure(tuple_value(preset.T_system, image) == N - preset.m, "lift lands in T_N");
        ensure(is_odd(image.d_sum()), "T_N tuples have odd e-sum");
        ensure(follower.backward(image) == s, "paths are reversible");
        table.entries.emplace_back(s, std::move(image));
    });
    std::vector<const SolutionTuple*> images;
    images.reserve(table.entries.size());
    for (const auto& e : table.entries)
        images.push_back(&e.second);
    std::sort(images.begin(), images.end(), [](const auto* a, const auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < images.size(); ++i)
        ensure(!(*images[i] == *images[i - 1]), "lift is injective");
    ensure(static_cast<Int>(images.size()) == count_solutions(preset.T_system, N - preset.m),
           "lift image exhausts T_N");
    return table;
}

LiftStats verify_lift(const IdentityPreset& preset, Int N)
{
    require(uses_lattice(preset), "lift is defined for mod5 and mod11");
    require(N >= preset.N0, "lift needs N >= N0");
    LiftStats stats;
    stats.N = N;
    PathFollower follower(preset);
    std::vector<StarElement> path;
    for_each_solution(preset.S_system, N, catalog_for(preset.S_system, N), [&](const SolutionTuple& s) {
        const auto& end = follower.walk_S(s);
        stats.longest_path = std::max(stats.longest_path, follower.trail().size());
        ensure(end.in_T(), "lift lands in T");
        ensure(star_weight(preset, end) == N, "lift preserves weight");
        ensure(is_odd(std::accumulate(end.payload.coords.begin(), end.payload.coords.end(), Int{0})),
               "T_N tuples have odd e-sum");
        const auto& back = follower.walk_back();
        ensure(back.partitions == s.nus && back.payload.coords == s.ds, "paths are reversible");
        ++stats.size;
    });
    ensure(stats.size == count_solutions(preset.T_system, N - preset.m), "|S_N| = |T_N|");
    return stats;
}

EndToEndResult end_to_end(const IdentityPreset& preset, const ColoredPartition& pi)
{
    PathFollower follower(preset);
    return end_to_end(follower, pi);
}

ColoredPartition end_to_end_inverse(const IdentityPreset& preset, const ColoredPartition& tau, int label,
                                    EndToEndResult* trace)
{
    PathFollower follower(preset);
    return end_to_end_inverse(follower, tau, label, trace);
}

EndToEndResult end_to_end(PathFollower& follower, const ColoredPartition& pi, bool keep_path)
{
    const auto& preset = follower.preset();
    if (!uses_lattice(preset) && !uses_kim(preset))
        throw std::invalid_argument("cpi: no bijection is known for preset " + preset.name);
    require(is_valid_for(preset.S_system, pi), "partition is not valid for the S-system");
    require(pi.weight() >= preset.N0, "partition weight below N0");
    EndToEndResult r;
    auto sols = solutions_for(preset.S_system, pi);
    ensure(sols.size() == 1, "an S-partition has exactly one tuple");
    r.source = std::move(sols.front());
    if (uses_kim(preset))
        r.target = kim_map(r.source);
    else
        r.target = follower.forward(r.source, keep_path ? &r.path : nullptr);
    r.image = partition_for(preset.T_system, r.target);
    r.label = label_of(preset.T_system, r.target);
    ensure(r.image.weight() == pi.weight() - preset.m, "end_to_end drops weight by m");
    return r;
}

ColoredPartition end_to_end_inverse(PathFollower& follower, const ColoredPartition& tau, int label,
                                    EndToEndResult* trace)
{
    const auto& preset = follower.preset();
    if (!uses_lattice(preset) && !uses_kim(preset))
        throw std::invalid_argument("cpi: no bijection is known for preset " + preset.name);
    require(is_valid_for(preset.T_system, tau), "partition is not valid for the T-system");
    require(tau.weight() + preset.m >= preset.N0, "partition weight below N0 - m");
    EndToEndResult local;
    auto& r = trace ? *trace : local;
    r.path.clear();
    r.image = tau;
    r.label = label;
    r.target = tuple_for_label(preset.T_system, tau, label);
    if (uses_kim(preset))
        r.source = kim_inverse(r.target);
    else
        r.source = follower.backward(r.target, trace ? &r.path : nullptr);
    auto pi = partition_for(preset.S_system, r.source);
    ensure(pi.weight() == tau.weight() + preset.m, "end_to_end_inverse raises weight by m");
    return pi;
}

} // namespace cpi
