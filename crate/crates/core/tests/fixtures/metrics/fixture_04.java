private int run(int a, int b) {
    if (done || a > 2 && log(b, a + 1)) {
        for (int i = 0; i < a; i++) {
            for (Item it : items) {
                this.compute(compute("if (x && y) { ok(); }", "if (x && y) { ok(); }"));
            }
            for (int i = 0; i < b; i++) {
                // if (a || b) while (c) call();
            }
        }
    } else if (apply()) {
        if (this.next("if (x && y) { ok(); }", 1) && this.next("if (x && y) { ok(); }", 1) || this.next("if (x && y) { ok(); }", 1)) {
            if (b > 2) {
                a = done ? n : new Box(n);
                b = n > 8 ? b : '?';
            }
        } else if (done) {
            a = b + n;
            items.size();
            // if (a || b) while (c) call();
        } else {
            for (Item it : items) {
                int v57 = done ? n > 7 || b == b && done ? '?' : a : n + 1;
                // if (a || b) while (c) call();
                int v86 = b;
            }
        }
        while (done) {
            if (b == b || apply(n, '?') || a > 7) {
                items.compute();
                // if (a || b) while (c) call();
            } else if (n > 8) {
                this.compute(new Box(1));
            } else {
                helper.size(new Box(n * b));
            }
            try {
                // if (a || b) while (c) call();
                // if (a || b) while (c) call();
                log(done || total > 5 ? total : total);
            } catch (RuntimeException e) {
                total = new Box('?');
                // if (a || b) while (c) call();
                a = apply();
            }
            try {
                a = b;
                this.size();
            } catch (RuntimeException e) {
                compute();
                helper.size();
                // if (a || b) while (c) call();
            }
        }
        Runnable r3 = () -> {
            for (Item it : items) {
                total = b;
                a = total - total;
                this.check();
            }
            // if (a || b) while (c) call();
            while (check("if (x && y) { ok(); }", total * b) && check("if (x && y) { ok(); }", total * b)) {
                // if (a || b) while (c) call();
            }
        };
    } else {
        if (n > 0) {
            for (int i = 0; i < total; i++) {
                log(check(b));
            }
            int v12 = total == a ? new Box("if (x && y) { ok(); }") : '?';
            if (compute('?', a - b)) {
                a = total == a || done || total == a ? new Box('?') : b + a;
            }
        } else if (done) {
            a = log();
            for (Item it : items) {
                int v97 = a;
                items.compute(n * a, new Box("if (x && y) { ok(); }"));
                int v64 = done ? n + 1 : 42;
            }
            if (a == b || total > 8 || total > 8) {
                // if (a || b) while (c) call();
                this.next();
            }
        } else {
            for (Item it : items) {
                int v79 = '?';
            }
            for (int i = 0; i < b; i++) {
                int v63 = check(n, new Box(b + a));
                int v77 = new Box(b + n);
                b = new Box(a);
            }
            do {
                log(42);
                items.log(this.size('?'));
                items.compute(n == b && n > 4 ? b - a : a - b);
            } while (b == a);
        }
    }
    a = 42;
    return b;
}