#include "cdc/engine.hpp"

#include <algorithm>

namespace cdc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int words_for(int bits) { return (bits + 63) / 64; }

void mask_tail(Block& b, int bits) {
    const int rem = bits % 64;
    if (rem != 0) b.back() &= (std::uint64_t{1} << rem) - 1;
}

void xor_into(Block& acc, const Block& b) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= b[i];
}

std::string tx_label(std::size_t t) { return "transmission #" + std::to_string(t); }

} // namespace

Block generate_block(std::uint64_t seed, int q, FileId n, int bits) {
    Block b(words_for(bits));
    std::uint64_t key = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
    key = splitmix64(key ^ static_cast<std::uint64_t>(q));
    key = splitmix64(key ^ (static_cast<std::uint64_t>(n) << 20));
    for (std::size_t w = 0; w < b.size(); ++w) b[w] = splitmix64(key + w);
    mask_tail(b, bits);
    return b;
}

IVStore map_phase(const Instance& inst, const Placement& placement, std::uint64_t seed) {
    placement.validate(inst);
    IVStore store;
    store.seed = seed;
    store.iv_bits = inst.iv_bits();
    store.held.resize(inst.nodes());
    for (NodeId k = 1; k <= inst.nodes(); ++k) {
        for (FileId n : placement.files_at(k)) {
            for (int q = 1; q <= inst.functions(); ++q) {
                store.held[k - 1][{q, n}] = generate_block(seed, q, n, inst.iv_bits());
                ++store.generated;
            }
        }
    }
    return store;
}

ShuffleOutcome run_shuffle(const Instance& inst, const ShufflePlan& plan, IVStore& store) {
    const int K = inst.nodes();
    const int per = inst.functions_per_node();
    ShuffleOutcome out;
    out.egress_bits.assign(K, 0);

    for (std::size_t t = 0; t < plan.transmissions.size(); ++t) {
        const Transmission& tx = plan.transmissions[t];
        if (tx.sender < 1 || tx.sender > K || tx.payload.empty()) {
            out.faults.push_back(tx_label(t) + " is malformed");
            continue;
        }
        out.egress_bits[tx.sender - 1] += inst.group_bits() * tx.width_iv;
        const auto& sender_store = store.held[tx.sender - 1];

        // One XOR block per offset inside the owners' reduce sets.
        std::vector<std::vector<IvKey>> parts(per);
        std::vector<Block> coded(per, Block(words_for(inst.iv_bits()), 0));
        bool sender_ok = true;
        for (int o = 0; o < per && sender_ok; ++o) {
            for (const IvGroup& g : tx.payload) {
                if (g.owner < 1 || g.owner > K) {
                    sender_ok = false;
                    break;
                }
                IvKey key{(g.owner - 1) * per + o + 1, g.file};
                auto it = sender_store.find(key);
                if (it == sender_store.end()) {
                    sender_ok = false;
                    break;
                }
                parts[o].push_back(key);
                xor_into(coded[o], it->second);
            }
        }
        if (!sender_ok) {
            out.faults.push_back(tx_label(t) + ": sender " + std::to_string(tx.sender) +
                                 " does not hold every encoded value");
            continue;
        }

        for (NodeId r = 1; r <= K; ++r) {
            if (r == tx.sender) continue;
            auto& mine = store.held[r - 1];
            bool flagged = false;
            for (int o = 0; o < per; ++o) {
                std::vector<IvKey> unknown;
                for (const IvKey& key : parts[o])
                    if (!mine.contains(key)) unknown.push_back(key);
                if (unknown.size() == 1) {
                    Block value = coded[o];
                    for (const IvKey& key : parts[o])
                        if (key != unknown.front()) xor_into(value, mine.at(key));
                    if (value != generate_block(store.seed, unknown.front().first, unknown.front().second,
                                                store.iv_bits))
                        out.faults.push_back(tx_label(t) + ": decoded value differs from the source");
                    mine.emplace(unknown.front(), std::move(value));
                    ++out.decoded;
                } else if (unknown.size() > 1 && !flagged) {
                    bool needed = std::any_of(unknown.begin(), unknown.end(),
                                              [&](const IvKey& key) { return inst.reducer_of(key.first) == r; });
                    if (needed) {
                        out.undecodable.emplace_back(r, t);
                        flagged = true;
                    }
                }
            }
        }
    }

    const std::int64_t denom = std::int64_t(inst.functions()) * inst.iv_bits();
    for (NodeId k = 1; k <= K; ++k)
        if (Rational(K * out.egress_bits[k - 1], denom) > Rational(inst.budget(k))) out.over_budget.push_back(k);
    return out;
}

ShuffleOutcome shuffle_phase(const Instance& inst, const ShufflePlan& plan, IVStore& store) {
    ShuffleOutcome out = run_shuffle(inst, plan, store);
    if (!out.faults.empty()) throw InvalidInput(out.faults.front());
    if (!out.undecodable.empty())
        throw UndecodablePayload(out.undecodable.front().first, out.undecodable.front().second);
    if (!out.over_budget.empty()) throw BudgetViolation(out.over_budget.front());
    return out;
}

std::vector<MissingValue> missing_values(const Instance& inst, const IVStore& store) {
    std::vector<MissingValue> gaps;
    for (NodeId k = 1; k <= inst.nodes(); ++k)
        for (int q : inst.reduce_set(k))
            for (FileId n = 1; n <= inst.files(); ++n)
                if (!store.holds(k, q, n)) gaps.push_back({k, q, n});
    return gaps;
}

ReduceOutput reduce_phase(const Instance& inst, const IVStore& store) {
    auto gaps = missing_values(inst, store);
    if (!gaps.empty()) throw MissingIntermediate(std::move(gaps));
    ReduceOutput out;
    const int words = words_for(inst.iv_bits());
    for (NodeId k = 1; k <= inst.nodes(); ++k) {
        for (int q : inst.reduce_set(k)) {
            std::uint64_t h = splitmix64(store.seed ^ 0xbb67ae8584caa73bULL ^ static_cast<std::uint64_t>(q));
            for (FileId n = 1; n <= inst.files(); ++n)
                for (std::uint64_t w : store.held[k - 1].at({q, n})) h = splitmix64(h ^ w);
            Block digest(words);
            for (int w = 0; w < words; ++w) digest[w] = splitmix64(h + static_cast<std::uint64_t>(w));
            mask_tail(digest, inst.iv_bits());
            out.digests[{k, q}] = std::move(digest);
        }
    }
    return out;
}

Verification verify_plan(const Instance& inst, const Placement& placement, const ShufflePlan& plan,
                         std::uint64_t seed) {
    Verification v;
    try {
        placement.validate(inst);
        check_plan(placement, plan, inst);
    } catch (const InvalidInput& e) {
        v.errors.push_back(e.what());
        return v;
    }
    v.report = measure_loads(placement, plan, inst);

    IVStore store = map_phase(inst, placement, seed);
    ShuffleOutcome sh = run_shuffle(inst, plan, store);
    for (const auto& f : sh.faults) v.errors.push_back(f);
    v.undecodable = sh.undecodable;
    for (const auto& [r, t] : sh.undecodable)
        v.errors.push_back(UndecodablePayload(r, t).what());
    v.budget_violations = v.report.over_budget;
    for (NodeId k : v.budget_violations) v.errors.push_back(BudgetViolation(k).what());

    v.missing = missing_values(inst, store);
    if (!v.missing.empty()) v.errors.push_back(MissingIntermediate(v.missing).what());
    else v.output = reduce_phase(inst, store);

    v.feasible = v.errors.empty();
    return v;
}

} // namespace cdc
