#include "swapnet/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace swapnet {

namespace {

// Bus slot a two-qubit gate must serialize on, or -1. Edge-coupled pairs run
// on the edge even when both operands also share a bus.
int claimed_bus(const CouplingMap& m, const Gate& g) {
  if (!g.two_qubit()) return -1;
  if (m.edge_coupled(g.q0, g.q1)) return -1;
  const int bus = m.bus_of(g.q0);
  if (bus < 0 || bus != m.bus_of(g.q1))
    throw std::invalid_argument("schedule: two-qubit gate on an uncoupled pair");
  return bus;
}

}  // namespace

ScheduleResult schedule(const Circuit& c, const CouplingMap& m, const GateDurations& d) {
  if (c.level != Level::lowered)
    throw std::invalid_argument("schedule: circuit must be lowered first");
  if (c.width > m.n) throw std::invalid_argument("schedule: circuit wider than the map");
  validate(c);
  ScheduleResult r;
  r.start.reserve(c.gates.size());
  std::vector<long long> qubit_free(m.n, 0), bus_free(m.buses.size(), 0);
  for (const Gate& g : c.gates) {
    long long t = qubit_free[g.q0];
    int bus = -1;
    if (g.two_qubit()) {
      t = std::max(t, qubit_free[g.q1]);
      bus = claimed_bus(m, g);
      if (bus >= 0) t = std::max(t, bus_free[bus]);
    }
    const long long end = t + (g.two_qubit() ? d.t_2q : d.t_1q);
    r.start.push_back(t);
    qubit_free[g.q0] = end;
    if (g.two_qubit()) qubit_free[g.q1] = end;
    if (bus >= 0) bus_free[bus] = end;
    r.makespan = std::max(r.makespan, end);
  }
  r.two_q_count = count_2q(c);
  r.two_q_depth = depth_2q(c);
  return r;
}

long long scaled_time(const Circuit& c, const CouplingMap& m) {
  return schedule(c, m).makespan;
}

std::string dump_schedule(const Circuit& c, const CouplingMap& m, const ScheduleResult& r,
                          const GateDurations& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const long long end = r.start[i] + (g.two_qubit() ? d.t_2q : d.t_1q);
    out << i << ' ' << r.start[i] << ' ' << end << " q" << g.q0;
    if (g.two_qubit()) {
      out << " q" << g.q1;
      const int bus = claimed_bus(m, g);
      if (bus >= 0) out << " bus" << bus;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace swapnet
