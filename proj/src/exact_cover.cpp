#include "ta/exact_cover.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ta {

std::string write_exact_cover(const ExactCoverInstance& inst) {
    std::ostringstream os;
    os << "items " << inst.n_items << '\n';
    for (const auto& opt : inst.options) {
        for (size_t i = 0; i < opt.size(); ++i) os << (i ? " " : "") << opt[i];
        os << '\n';
    }
    return os.str();
}

ExactCoverInstance read_exact_cover(std::istream& in) {
    ExactCoverInstance inst;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream iss(line);
        if (!header) {
            std::string tag;
            if (!(iss >> tag)) continue;
            if (tag != "items") throw std::runtime_error("exact-cover: expected \"items n\" header");
            if (!(iss >> inst.n_items)) throw std::runtime_error("exact-cover: bad header");
            header = true;
            continue;
        }
        std::vector<int> opt;
        int x;
        while (iss >> x) opt.push_back(x);
        if (opt.empty()) continue;
        std::sort(opt.begin(), opt.end());
        for (int it : opt)
            if (it < 0 || it >= inst.n_items) throw std::runtime_error("exact-cover: item out of range");
        inst.options.push_back(std::move(opt));
    }
    if (!header) throw std::runtime_error("exact-cover: missing header");
    return inst;
}

ExactCoverInstance read_exact_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_exact_cover(in);
}

ExactCoverSolver::ExactCoverSolver(const ExactCoverInstance& inst) : n_items_(inst.n_items) {
    int nopt = static_cast<int>(inst.options.size());
    opt_off_.assign(nopt + 1, 0);
    for (int o = 0; o < nopt; ++o) {
        if (inst.options[o].empty()) throw std::invalid_argument("exact cover: empty option");
        opt_off_[o + 1] = opt_off_[o] + static_cast<int>(inst.options[o].size());
    }
    opt_items_.resize(opt_off_[nopt]);
    opt_pos_.assign(opt_off_[nopt], 0);
    item_opts_.assign(n_items_, {});
    for (int o = 0; o < nopt; ++o) {
        int k = opt_off_[o];
        for (int it : inst.options[o]) {
            if (it < 0 || it >= n_items_) throw std::invalid_argument("exact cover: item out of range");
            opt_items_[k] = it;
            opt_pos_[k] = static_cast<int>(item_opts_[it].size());
            item_opts_[it].push_back(o);
            ++k;
        }
    }
    alen_.resize(n_items_);
    for (int i = 0; i < n_items_; ++i) alen_[i] = static_cast<int>(item_opts_[i].size());
    covered_.assign(n_items_, 0);
}

void ExactCoverSolver::hide(int opt, int item) {
    // locate item's slot within opt
    int slot = -1;
    for (int k = opt_off_[opt]; k < opt_off_[opt + 1]; ++k)
        if (opt_items_[k] == item) {
            slot = k;
            break;
        }
    auto& lst = item_opts_[item];
    int last = alen_[item] - 1;
    int p = opt_pos_[slot];
    int moved = lst[last];
    lst[p] = moved;
    lst[last] = opt;
    // fix moved option's position entry for this item
    for (int k = opt_off_[moved]; k < opt_off_[moved + 1]; ++k)
        if (opt_items_[k] == item) {
            opt_pos_[k] = p;
            break;
        }
    opt_pos_[slot] = last;
    alen_[item] = last;
    hide_trail_.push_back(item);
}

void ExactCoverSolver::cover(int opt) {
    for (int k = opt_off_[opt]; k < opt_off_[opt + 1]; ++k) {
        int item = opt_items_[k];
        covered_[item] = 1;
        cover_trail_.push_back(item);
    }
    for (int k = opt_off_[opt]; k < opt_off_[opt + 1]; ++k) {
        int item = opt_items_[k];
        // remove every option of this item from all its other item lists;
        // an option meeting two covered items is processed exactly once
        for (int oi = alen_[item] - 1; oi >= 0; --oi) {
            int p = item_opts_[item][oi];
            for (int k2 = opt_off_[p]; k2 < opt_off_[p + 1]; ++k2) {
                int it2 = opt_items_[k2];
                if (it2 != item) hide(p, it2);
            }
        }
    }
}

void ExactCoverSolver::uncover_to(size_t hide_mark, size_t cover_mark) {
    while (hide_trail_.size() > hide_mark) {
        int item = hide_trail_.back();
        hide_trail_.pop_back();
        ++alen_[item];
    }
    while (cover_trail_.size() > cover_mark) {
        covered_[cover_trail_.back()] = 0;
        cover_trail_.pop_back();
    }
}

bool ExactCoverSolver::recurse() {
    // pick uncovered item with fewest active options, lowest index on ties
    int best = -1;
    for (int i = 0; i < n_items_; ++i) {
        if (covered_[i]) continue;
        if (best < 0 || alen_[i] < alen_[best]) best = i;
    }
    if (best < 0) {
        ++solutions_;
        std::vector<int> sol = choice_;
        std::sort(sol.begin(), sol.end());
        if (!(*visit_)(sol)) stop_ = true;
        return !stop_;
    }
    if (alen_[best] == 0) return true;

    std::vector<int> cand(item_opts_[best].begin(), item_opts_[best].begin() + alen_[best]);
    std::sort(cand.begin(), cand.end());
    for (int o : cand) {
        if (budget_ && nodes_ >= budget_) {
            exhausted_ = true;
            stop_ = true;
            return false;
        }
        ++nodes_;
        size_t hm = hide_trail_.size(), cm = cover_trail_.size();
        cover(o);
        choice_.push_back(o);
        bool cont = recurse();
        choice_.pop_back();
        uncover_to(hm, cm);
        if (!cont) return false;
    }
    return true;
}

SolveStats ExactCoverSolver::solve(const std::function<bool(const std::vector<int>&)>& visit,
                                   uint64_t node_budget) {
    nodes_ = 0;
    solutions_ = 0;
    stop_ = false;
    exhausted_ = false;
    budget_ = node_budget;
    visit_ = &visit;
    recurse();
    return {nodes_, solutions_, exhausted_};
}

SolveStats ExactCoverSolver::count_all(uint64_t node_budget) {
    return solve([](const std::vector<int>&) { return true; }, node_budget);
}

std::pair<std::vector<int>, SolveStats> ExactCoverSolver::find_first(uint64_t node_budget) {
    std::vector<int> found;
    SolveStats st = solve(
        [&](const std::vector<int>& sol) {
            found = sol;
            return false;
        },
        node_budget);
    return {found, st};
}

} // namespace ta
