#include <iostream>

#include "poollines/gtfs.h"
#include "poollines/synthetic_city.h"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_synthetic_city <output dir>\n";
    return 1;
  }
  auto const tt = poollines::timetable{poollines::make_synthetic_city()};
  std::filesystem::create_directories(argv[1]);
  poollines::write_gtfs(tt, argv[1]);
  std::cout << tt.stops().size() << " stops, " << tt.trips().size()
            << " trips, " << tt.stop_times().size() << " stop times\n";
}
