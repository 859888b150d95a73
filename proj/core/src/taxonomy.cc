#include "sydra/taxonomy.h"

#include <algorithm>

namespace sydra {
namespace {

constexpr std::array<SubsystemInfo, kSubsystemCount> kTable = {{
    {SubsystemId::kAUD, "AUD", "Audio", "Manages audio playback and effects."},
    {SubsystemId::kCOR, "COR", "Core",
     "Manages engine initialisation and contains libraries for math, memory "
     "allocation, etc."},
    {SubsystemId::kDEB, "DEB", "Profiling & Debugging",
     "Manages performance stats, debugging via in-game menus or console."},
    {SubsystemId::kEDI, "EDI", "World Editor",
     "Enables visual game world-building."},
    {SubsystemId::kFES, "FES", "Front End",
     "Manages GUI, menus, heads-up display (HUD), and video playback."},
    {SubsystemId::kGMP, "GMP", "Gameplay Foundations",
     "Manages the game object model, scripting and event/messaging system."},
    {SubsystemId::kHID, "HID", "Human Interface Devices",
     "Manages game-specific input interfaces, physical I/O devices."},
    {SubsystemId::kLLR, "LLR", "Low-Level Renderer",
     "Manages cameras, textures, shaders, fonts, and general drawing tasks."},
    {SubsystemId::kOMP, "OMP", "Online Multiplayer",
     "Manages match-making and game state replication."},
    {SubsystemId::kPHY, "PHY", "Collision & Physics",
     "Manages forces and constraints, rigid bodies, ray/shape casting."},
    {SubsystemId::kPLA, "PLA", "Platform Independence Layer",
     "Manages platform-specific graphics, file systems, threading, etc."},
    {SubsystemId::kRES, "RES", "Resources",
     "Manages the loading/caching of game assets, such as 3D models, "
     "textures, fonts, etc."},
    {SubsystemId::kSDK, "SDK", "Third-Party SDKs",
     "Enables interfacing with DirectX, OpenGL, Havok, PhysX, STL, etc."},
    {SubsystemId::kSKA, "SKA", "Skeletal Animation",
     "Manages animation state tree, inverse kinematics (IK), and mesh "
     "rendering."},
    {SubsystemId::kSGC, "SGC", "Scene Graph/Culling Optimizations",
     "Computes spatial hash, occlusion, and level of detail (LOD)."},
    {SubsystemId::kVFX, "VFX", "Visual Effects",
     "Enables light mapping, dynamic shadows, particles, decals, etc."},
    {SubsystemId::kUNK, "UNK", "Unmapped",
     "Files not matched by any mapping rule."},
}};

template <std::size_t N>
constexpr std::array<SubsystemId, N> FirstIds() {
  std::array<SubsystemId, N> ids{};
  for (std::size_t i = 0; i < N; ++i) ids[i] = kTable[i].id;
  return ids;
}

constexpr auto kAll = FirstIds<kSubsystemCount>();
constexpr auto kReference = FirstIds<kReferenceSubsystemCount>();

}  // namespace

const SubsystemInfo& Describe(SubsystemId id) { return kTable[Index(id)]; }

std::optional<SubsystemId> ParseSubsystemId(std::string_view code) {
  auto it = std::find_if(kTable.begin(), kTable.end(),
                         [&](const SubsystemInfo& s) { return s.code == code; });
  if (it == kTable.end()) return std::nullopt;
  return it->id;
}

const std::array<SubsystemId, kSubsystemCount>& AllSubsystems() { return kAll; }

const std::array<SubsystemId, kReferenceSubsystemCount>& ReferenceSubsystems() {
  return kReference;
}

}  // namespace sydra
