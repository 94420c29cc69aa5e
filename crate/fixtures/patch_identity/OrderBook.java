package com.example.orders;

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
 * OrderBook keeps order records in memory.
 */
public class OrderBook implements Iterable<OrderBook.Order> {

  private static final int DEFAULT_CAPACITY = 0x40;
  private final List<Order> items = new ArrayList<>(DEFAULT_CAPACITY);
  private final Map<String, Order> index = new HashMap<>();
  private final Object lock = new Object();
  private final byte[] buffer = new byte[16];
  private volatile boolean closed;
  private String label = "default";

  public OrderBook() {
    this("default");
  }

  public OrderBook(String label) {
    this.label = Objects.requireNonNull(label, "label");
  }

  @Override
  public Iterator<Order> iterator() {
    return Collections.unmodifiableList(items).iterator();
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

  /* Legacy entry point. */
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

  @Deprecated(since = "2.1", forRemoval = false)
  protected static char sanitize1(char c) {
    // Map control and quote characters to printable stand-ins.
    if (c == '\n' || c == '\t') return ' ';
    if (c == '\'' || c == '"') return '`';
    return Character.isISOControl(c) ? '?' : c;
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public int[] sorted2(int[] data) {
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

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  @Override
  public String render1() {
    StringBuilder sb = new StringBuilder("OrderBook[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  // Hot path: keep allocation-free.
  public Runnable schedule1(final int delay) {
    return new Runnable() {
      @Override
      public void run() {
        try {
          Thread.sleep(delay);
        } catch (InterruptedException ex) {
          Thread.currentThread().interrupt();
        }
      }
    };
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public long measure1(Path source) throws IOException {
    long total = 0L;
    try (BufferedReader reader = Files.newBufferedReader(source, StandardCharsets.UTF_8)) {
      String line;
      while ((line = reader.readLine()) != null) {
        if (line.startsWith("#")) continue;
        total += line.trim().length();
      }
    } catch (UncheckedIOException e) {
      throw e.getCause();
    } finally {
      closed = true;
    }
    return total;
  }

  // Hot path: keep allocation-free.
  public boolean sameAs1(Object other) {
    if (this == other) return true;
    if (!(other instanceof OrderBook that)) return false;
    return Objects.equals(label, that.label)
        && items.size() == that.items.size();
  }

  /* Legacy entry point. */
  public long measure2(Path source) throws IOException {
    long total = 0L;
    try (BufferedReader reader = Files.newBufferedReader(source, StandardCharsets.UTF_8)) {
      String line;
      while ((line = reader.readLine()) != null) {
        if (line.startsWith("#")) continue;
        total += line.trim().length();
      }
    } catch (UncheckedIOException e) {
      throw e.getCause();
    } finally {
      closed = true;
    }
    return total;
  }

  @Override
  public String render2() {
    StringBuilder sb = new StringBuilder("OrderBook[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  @Override
  public String render3() {
    StringBuilder sb = new StringBuilder("OrderBook[");
    sb.append("size=").append(items.size());
    sb.append(", label='").append(label).append('\'');
    return sb.append(']').toString();
  }

  /* Legacy entry point. */
  public int[] sorted3(int[] data) {
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

  @Deprecated(since = "2.1", forRemoval = false)
  public List<Order> select1(Predicate<? super Order> filter) {
    return items.stream()
        .filter(filter)
        .sorted(Comparator.comparing(Object::toString))
        .collect(Collectors.toList());
  }

  @Deprecated(since = "2.1", forRemoval = false)
  protected static char sanitize2(char c) {
    // Map control and quote characters to printable stand-ins.
    if (c == '\n' || c == '\t') return ' ';
    if (c == '\'' || c == '"') return '`';
    return Character.isISOControl(c) ? '?' : c;
  }

  public Optional<Order> lookup1(String key) {
    if (key == null || key.isEmpty()) {
      return Optional.empty();
    }
    synchronized (lock) {
      return Optional.ofNullable(index.get(key));
    }
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  public Runnable schedule2(final int delay) {
    return new Runnable() {
      @Override
      public void run() {
        try {
          Thread.sleep(delay);
        } catch (InterruptedException ex) {
          Thread.currentThread().interrupt();
        }
      }
    };
  }

  protected static char sanitize3(char c) {
    // Map control and quote characters to printable stand-ins.
    if (c == '\n' || c == '\t') return ' ';
    if (c == '\'' || c == '"') return '`';
    return Character.isISOControl(c) ? '?' : c;
  }

  // Hot path: keep allocation-free.
  @SuppressWarnings("unchecked")
  public <T extends Comparable<? super T>> T pick1(T... candidates) {
    T best = null;
    for (T c : candidates) {
      best = (best == null || c.compareTo(best) > 0) ? c : best;
    }
    return best;
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
  public List<Order> select2(Predicate<? super Order> filter) {
    return items.stream()
        .filter(filter)
        .sorted(Comparator.comparing(Object::toString))
        .collect(Collectors.toList());
  }

  @Deprecated(since = "2.1", forRemoval = false)
  public Map<String, Integer> tally1(Collection<String> words) {
    Map<String, Integer> freq = new TreeMap<>();
    words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
    freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
    return freq;
  }

  /**
   * Returns a derived value.
   *
   * @return the result, never {@code null}
   */
  public String describe1() {
    String template = """
      Report for %s
        entries: %d \
        (continued)
      """;
    return template.formatted(label, items.size());
  }

  /** A single order. */
  public static final class Order implements Comparable<Order> {
    private final String id;
    private int weight;

    Order(String id, int weight) {
      this.id = id;
      this.weight = weight;
    }

    @Override
    public int compareTo(Order o) {
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
    void onChange(Order e);

    default Listener andThen(Listener next) {
      return e -> { onChange(e); next.onChange(e); };
    }
  }
}
