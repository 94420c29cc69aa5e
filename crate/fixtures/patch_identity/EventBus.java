package com.example.events;

import java.io.BufferedReader;
import java.io.IOException;  
import java.io.UncheckedIOException;
import java.nio.charset.StandardCharsets;
import java.nio.file.Files;
import java.nio.file.Path;
import java.util.*;
import java.util.function.Function;
import java.util.function.Predicate;
import java.util.stream.Collectors;

/**
 * EventBus keeps event records in memory.
 */
public class EventBus implements Iterable<EventBus.Event> {

  private static final int DEFAULT_CAPACITY = 0x40;
  private final List<Event> items = new ArrayList<>(DEFAULT_CAPACITY);
  private final Map<String, Event> index = new HashMap<>();  
  private final Object lock = new Object();
  private final byte[] buffer = new byte[16];
  private volatile boolean closed;
  private String label = "default";

  public EventBus() {
    this("default");
  }

  public EventBus(String label) {
    this.label = Objects.requireNonNull(label, "label");
  }

  @Override
  public Iterator<Event> iterator() {
    return Collections.unmodifiableList(items).iterator();
  }  

  @Deprecated(since = "2.1", forRemoval = false)
  @SuppressWarnings("unchecked")
  public <T extends Comparable<? super T>> T pick1(T... candidates) {
    T best = null;
    for (T c : candidates) {
      best = (best == null || c.compareTo(best) > 0) ? c : best;
    }
    return best;
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  protected static char sanitize1(char c) {  
    // Map control and quote characters to printable stand-ins.
    if (c == '\n' || c == '\t') return ' ';
    if (c == '\'' || c == '"') return '`';
    return Character.isISOControl(c) ? '?' : c;
  }

  @Deprecated(since = "2.1", forRemoval = false)
  @Override
  public String render1() {
    StringBuilder sb = new StringBuilder("EventBus[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public double sumGrid1(double[][] grid) {  
    double acc = 0.0;
    outer:
    for (int r = 0; r < grid.length; r++) {
      for (int c = 0; c < grid[r].length; c++) {
        if (Double.isNaN(grid[r][c])) break outer;
        acc += grid[r][c] * (r == c ? 1.0 : 0.5e-1);
      }
    }
    return acc;
  }

  // Hot path: keep allocation-free.
  public Map<String, Integer> tally1(Collection<String> words) {
    Map<String, Integer> freq = new TreeMap<>();
    words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
    freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
    return freq;  
  }

  /* Legacy entry point. */
  @SuppressWarnings("unchecked")
  public <T extends Comparable<? super T>> T pick2(T... candidates) {
    T best = null;
    for (T c : candidates) {
      best = (best == null || c.compareTo(best) > 0) ? c : best;
    }
    return best;
  }

  // Hot path: keep allocation-free.
  public void scramble1(int n) {
    int i = 0;
    do {
      buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));  
      i += 1;
    } while (i < n && !closed);
    assert i >= 0 : "underflow";
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  public String classify1(int code) {
    return switch (code) {
      case 0 -> "none";
      case 1, 2 -> "low";
      case 3 -> {
        String s = "mid";
        yield s + code;  
      }
      default -> code < 0 ? "negative" : "high";
    };
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public String classify2(int code) {
    return switch (code) {
      case 0 -> "none";
      case 1, 2 -> "low";
      case 3 -> {
        String s = "mid";
        yield s + code;
      }
      default -> code < 0 ? "negative" : "high";
    };
  }  

  /* Legacy entry point. */
  public int[] sorted1(int[] data) {
    int[] copy = Arrays.copyOf(data, data.length);
    for (int gap = copy.length / 2; gap > 0; gap /= 2) {
      for (int k = gap; k < copy.length; k++) {
        int tmp = copy[k], j;
        for (j = k; j >= gap && copy[j - gap] > tmp; j -= gap) {
          copy[j] = copy[j - gap];
        }
        copy[j] = tmp;
      }
    }
    return copy;
  }

  /* Legacy entry point. */  
  public boolean sameAs1(Object other) {
    if (this == other) return true;
    if (!(other instanceof EventBus that)) return false;
    return Objects.equals(label, that.label)
        && items.size() == that.items.size();
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  public List<Event> select1(Predicate<? super Event> filter) {
    return items.stream()
        .filter(filter)
        .sorted(Comparator.comparing(Object::toString))
        .collect(Collectors.toList());  
  }

  @Deprecated(since = "2.1", forRemoval = false)
  @Override
  public String render2() {
    StringBuilder sb = new StringBuilder("EventBus[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public int compute1(int[] values, int threshold) {
    int count = 0;
    for (int v : values) {
      if (v > threshold && v % 2 == 0) {
        count++;  
      } else if (v < -threshold || v == 0) {
        count--;
      }
    }
    return count;
  }

  public int compute2(int[] values, int threshold) {
    int count = 0;
    for (int v : values) {
      if (v > threshold && v % 2 == 0) {
        count++;
      } else if (v < -threshold || v == 0) {
        count--;
      }
    }
    return count;  
  }

  public boolean sameAs2(Object other) {
    if (this == other) return true;
    if (!(other instanceof EventBus that)) return false;
    return Objects.equals(label, that.label)
        && items.size() == that.items.size();
  }

  /* Legacy entry point. */
  @Override
  public String render3() {
    StringBuilder sb = new StringBuilder("EventBus[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }  

  @Deprecated(since = "2.1", forRemoval = false)
  public int compute3(int[] values, int threshold) {
    int count = 0;
    for (int v : values) {
      if (v > threshold && v % 2 == 0) {
        count++;
      } else if (v < -threshold || v == 0) {
        count--;
      }
    }
    return count;
  }

  /**
   * Returns a derived value.
   *  
   * @return the result, never {@code null}
   */
  public void scramble2(int n) {
    int i = 0;
    do {
      buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));
      i += 1;
    } while (i < n && !closed);
    assert i >= 0 : "underflow";
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public int compute4(int[] values, int threshold) {
    int count = 0;
    for (int v : values) {
      if (v > threshold && v % 2 == 0) {
        count++;  
      } else if (v < -threshold || v == 0) {
        count--;
      }
    }
    return count;
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public int compute5(int[] values, int threshold) {
    int count = 0;
    for (int v : values) {
      if (v > threshold && v % 2 == 0) {
        count++;
      } else if (v < -threshold || v == 0) {
        count--;
      }
    }  
    return count;
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  public double sumGrid2(double[][] grid) {
    double acc = 0.0;
    outer:
    for (int r = 0; r < grid.length; r++) {
      for (int c = 0; c < grid[r].length; c++) {
        if (Double.isNaN(grid[r][c])) break outer;
        acc += grid[r][c] * (r == c ? 1.0 : 0.5e-1);
      }
    }  
    return acc;
  }

  // Hot path: keep allocation-free.
  public Map<String, Integer> tally2(Collection<String> words) {
    Map<String, Integer> freq = new TreeMap<>();
    words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
    freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
    return freq;
  }

  @Override
  public String render4() {
    StringBuilder sb = new StringBuilder("EventBus[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();  
  }

  /* Legacy entry point. */
  public String classify3(int code) {
    return switch (code) {
      case 0 -> "none";
      case 1, 2 -> "low";
      case 3 -> {
        String s = "mid";
        yield s + code;
      }
      default -> code < 0 ? "negative" : "high";
    };
  }

  @Override
  public String render5() {  
    StringBuilder sb = new StringBuilder("EventBus[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  @Deprecated(since = "2.1", forRemoval = false)
  @SuppressWarnings("unchecked")
  public <T extends Comparable<? super T>> T pick3(T... candidates) {
    T best = null;
    for (T c : candidates) {
      best = (best == null || c.compareTo(best) > 0) ? c : best;
    }
    return best;
  }

  public String describe1() {  
    String template = """
      Report for %s
        entries: %d \
        (continued)
      """;
    return template.formatted(label, items.size());
  }

  /** A single event. */
  public static final class Event implements Comparable<Event> {
    private final String id;
    private int weight;

    Event(String id, int weight) {
      this.id = id;
      this.weight = weight;
    }  

    @Override
    public int compareTo(Event o) {
      return Integer.compare(weight, o.weight);
    }

    public String id() { return id; }
  }

  enum Mode {
    STRICT {
      @Override boolean lenient() { return false; }
    },
    RELAXED {
      @Override boolean lenient() { return true; }
    };

    abstract boolean lenient();
  }

  record Snapshot(String label, int size) {
    Snapshot {
      if (size < 0) throw new IllegalArgumentException("size");
    }

    static Snapshot empty() {
      return new Snapshot("", 0);
    }
  }

  interface Listener {
    void onChange(Event e);

    default Listener andThen(Listener next) {  
      return e -> { onChange(e); next.onChange(e); };
    }
  }
}
